#include "bhc/complement.hpp"

namespace bhc {

std::string ComplementModel::describe() const
{
    if (b2() == 0)
        return "S^2";
    return "S^2 u_" + to_string(attaching) + " (" + std::to_string(b2()) + " 4-cell"
           + (b2() == 1 ? "" : "s") + ")";
}

std::vector<FgAbGroup> homology_of(const ComplementModel& model)
{
    const std::vector<Index> ranks = model.cell_counts();
    // No cells in odd degrees, so every cellular boundary map is zero.
    std::vector<IntMatrix> boundaries(ranks.size());
    for (std::size_t k = 1; k < ranks.size(); ++k)
        boundaries[k] = IntMatrix::Zero(ranks[k - 1], ranks[k]);
    return chain_complex_homology(ranks, boundaries);
}

FgAbGroup pi3_of(const ComplementModel& model)
{
    IntMatrix hurewicz_image(1, model.b2());
    for (Index i = 0; i < model.b2(); ++i)
        hurewicz_image(0, i) = model.attaching(i);
    return cokernel(hurewicz_image);
}

std::optional<std::string> wedge_form(const ComplementModel& model)
{
    for (Index i = 0; i < model.b2(); ++i)
        if (model.attaching(i) != 0)
            return std::nullopt;
    if (model.b2() == 0)
        return "S^2";
    return "S^2 v " + std::to_string(model.b2()) + "*S^4";
}

} // namespace bhc
