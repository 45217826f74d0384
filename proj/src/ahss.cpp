#include "bhc/ahss.hpp"

namespace bhc {

SpaceDescriptor SpaceDescriptor::point()
{
    return SpaceDescriptor(Kind::Point, 0, "pt");
}

SpaceDescriptor SpaceDescriptor::sphere(int k)
{
    if (k < 1)
        throw UnsupportedSpace("sphere dimension must be positive");
    return SpaceDescriptor(Kind::Sphere, k, "S^" + std::to_string(k));
}

SpaceDescriptor SpaceDescriptor::complex_projective(int n)
{
    if (n < 0)
        throw UnsupportedSpace("negative complex projective dimension");
    return SpaceDescriptor(Kind::ComplexProjective, n, "CP^" + std::to_string(n));
}

SpaceDescriptor SpaceDescriptor::complex_projective_infinite()
{
    return SpaceDescriptor(Kind::ComplexProjective, -1, "CP^inf");
}

SpaceDescriptor SpaceDescriptor::from_homology(std::string name, std::vector<FgAbGroup> homology)
{
    for (std::size_t i = 0; i < homology.size(); ++i)
        if (!homology[i].torsion().empty())
            throw UnsupportedSpace(name + ": H_" + std::to_string(i) + " = " + homology[i].to_string()
                                   + " has torsion; only torsion-free bases are supported");
    SpaceDescriptor s(Kind::Tabulated, 0, std::move(name));
    s.homology_ = std::move(homology);
    return s;
}

FgAbGroup SpaceDescriptor::homology(int i) const
{
    if (i < 0 || i > max_homology_degree)
        throw UnsupportedSpace("homology degree " + std::to_string(i) + " outside 0.."
                               + std::to_string(max_homology_degree));
    switch (kind_) {
    case Kind::Point:
        return i == 0 ? FgAbGroup::free(1) : FgAbGroup::trivial();
    case Kind::Sphere:
        return (i == 0 || i == dim_) ? FgAbGroup::free(1) : FgAbGroup::trivial();
    case Kind::ComplexProjective:
        if (i % 2 != 0)
            return FgAbGroup::trivial();
        return (dim_ < 0 || i <= 2 * dim_) ? FgAbGroup::free(1) : FgAbGroup::trivial();
    case Kind::Tabulated:
        return static_cast<std::size_t>(i) < homology_.size() ? homology_[static_cast<std::size_t>(i)]
                                                              : FgAbGroup::trivial();
    }
    return FgAbGroup::trivial();
}

CoefficientRow CoefficientRow::from_table(const GroupTable& table, const std::string& prefix,
                                          const std::string& suffix)
{
    CoefficientRow row;
    row.name = prefix + "_*" + suffix;
    for (int j = 0; j < 8; ++j) {
        const auto& e = table.lookup(prefix + std::to_string(j) + suffix);
        row.groups[static_cast<std::size_t>(j)] = e.value;
        row.sources.push_back(e.key + ": " + e.source);
    }
    return row;
}

CoefficientRow CoefficientRow::bordism_bo5()
{
    return from_table(GroupTable::builtin(), "Omega", "(BO<5>)");
}

CoefficientRow CoefficientRow::fiber_bo5()
{
    return from_table(GroupTable::builtin(), "pi", "(F)");
}

CoefficientRow CoefficientRow::zero()
{
    CoefficientRow row;
    row.name = "0";
    return row;
}

FgAbGroup AHSSPage::at(int i, int j) const
{
    const auto it = entries.find({i, j});
    return it == entries.end() ? FgAbGroup::trivial() : it->second;
}

void AHSSPage::set(int i, int j, FgAbGroup g)
{
    if (g.is_trivial())
        entries.erase({i, j});
    else
        entries[{i, j}] = std::move(g);
}

std::vector<std::pair<int, int>> AHSSPage::nontrivial_on_line(int total) const
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [ij, g] : entries)
        if (ij.first + ij.second == total)
            out.push_back(ij);
    return out;
}

AHSSPage e2_page(const SpaceDescriptor& x, const CoefficientRow& row, int total_degree)
{
    if (total_degree < 0 || total_degree > max_total_degree)
        throw UnsupportedSpace("total degree " + std::to_string(total_degree) + " outside the supported window 0.."
                               + std::to_string(max_total_degree));
    AHSSPage page;
    page.page = 2;
    for (int total = std::max(0, total_degree - 1); total <= total_degree + 1; ++total)
        for (int j = 0; j <= std::min(total, 7); ++j) {
            const int i = total - j;
            // Torsion-free base: universal coefficients reduce to a tensor product.
            page.set(i, j, tensor_product(x.homology(i), row[j]));
        }
    return page;
}

int sq2_dual_cp(int k)
{
    if (k < 1)
        throw std::invalid_argument("sq2_dual_cp needs k >= 1");
    // Total square Sq(a) = a + a^2; Sq(a^k) = (a + a^2)^k by the Cartan formula.
    std::vector<int> poly{1};
    for (int step = 0; step < k; ++step) {
        std::vector<int> next(poly.size() + 2, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] ^= poly[d];
            next[d + 2] ^= poly[d];
        }
        poly = std::move(next);
    }
    return poly[static_cast<std::size_t>(k + 1)];
}

Degree7Analysis degree7_after_known_differentials(const SpaceDescriptor& x, const CoefficientRow& row)
{
    const bool is_s2 = x.kind() == SpaceDescriptor::Kind::Sphere && x.homology(2) == FgAbGroup::free(1)
                       && x.name() == "S^2";
    const bool is_cpinf = x.kind() == SpaceDescriptor::Kind::ComplexProjective && x.name() == "CP^inf";
    if (!is_s2 && !is_cpinf)
        throw UnsupportedSpace("degree-7 analysis supports S^2 and CP^inf, not " + x.name());

    constexpr int total = 7;
    Degree7Analysis out;
    out.e2 = e2_page(x, row, total);
    out.after = out.e2;
    out.after.page = 3;

    const FgAbGroup z = FgAbGroup::free(1);
    const FgAbGroup z2 = FgAbGroup::cyclic(2);
    if (is_cpinf && row[0] == z && row[1] == z2) {
        // d^2 : E_{8,0} = H_8 -> E_{6,1} = H_6(; Z_2) is reduction mod 2
        // followed by the dual of Sq^2 : H^6 -> H^8, i.e. k = 3.
        const FgAbGroup source = out.e2.at(8, 0);
        const FgAbGroup target = out.e2.at(6, 1);
        const int coefficient = sq2_dual_cp(3);
        if (!target.is_trivial() && !source.is_trivial()) {
            if (coefficient == 1) {
                out.after.set(6, 1, FgAbGroup::trivial());
                out.differentials.push_back("d^2: E^2_{8,0} = " + source.to_string() + " -> E^2_{6,1} = "
                                            + target.to_string()
                                            + " is rho_2 followed by (Sq^2)^* with coefficient 1: surjective, "
                                              "E_{6,1} killed");
            } else {
                out.differentials.push_back("d^2: E^2_{8,0} -> E^2_{6,1} vanishes ((Sq^2)^* coefficient 0)");
            }
        }
    }

    std::string line_desc;
    for (const auto& [i, j] : out.after.nontrivial_on_line(total)) {
        out.upper_bound = group_sum(out.upper_bound, out.after.at(i, j));
        if (!line_desc.empty())
            line_desc += ", ";
        line_desc += "E_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + out.after.at(i, j).to_string();
    }
    out.vanishes = out.upper_bound.is_trivial();

    const std::string target_name = row.name == "Omega_*(BO<5>)" ? "BO<5>" : "(" + row.name + ")";
    const std::string group_name = "Omega_7(" + x.name() + " x " + target_name + ")";
    if (out.vanishes) {
        out.conclusion = group_name + " = 0";
        if (out.differentials.empty())
            out.notes.push_back("every E^2_{i,7-i} is already trivial");
    } else {
        std::string killed;
        for (const auto& [ij, g] : out.e2.entries)
            if (ij.first + ij.second == total && out.after.at(ij.first, ij.second).is_trivial()) {
                if (!killed.empty())
                    killed += ", ";
                killed += "E^2_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "} = "
                          + g.to_string() + " killed";
            }
        out.conclusion = (killed.empty() ? std::string() : killed + "; ") + line_desc
                         + " upper bound after known differentials: " + group_name
                         + " has a filtration with subquotients bounded by " + out.upper_bound.to_string();
        if (is_cpinf)
            out.notes.push_back("higher differentials are not modeled; the surviving E_{4,3} classes are reached "
                                "by the epimorphism Omega_3^fr -> Omega_7(CP^inf x BO<5>)/i_*theta_7, "
                                "L -> (CP^2 x S^3 -> CP^inf x BO<5>), a geometric step not computed here");
    }
    return out;
}

ObstructionGroups obstruction_groups(const std::vector<FgAbGroup>& base_homology, const CoefficientRow& fiber_row)
{
    ObstructionGroups out;
    for (const auto& h : base_homology)
        if (!h.torsion().empty())
            out.torsion_terms_omitted = true;
    for (int i = 0; i < 8; ++i) {
        const int degree = 4 - i;
        FgAbGroup h;
        if (degree >= 0 && static_cast<std::size_t>(degree) < base_homology.size())
            h = base_homology[static_cast<std::size_t>(degree)];
        out.groups.push_back(tensor_product(h, fiber_row[i]));
    }
    return out;
}

} // namespace bhc
