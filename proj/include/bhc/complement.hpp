/**
 * Homotopy models S^2 u_x (D^4_1 u ... u D^4_b) of the complement of an
 * embedding N -> R^7 with H_1(N) = 0, where x in Z^b is the
 * Boechat-Haefliger class of the embedding written in a basis of H_2(N).
 */
#ifndef BHC_COMPLEMENT_HPP
#define BHC_COMPLEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "bhc/fg_ab_group.hpp"
#include "bhc/scalar.hpp"

namespace bhc {

struct ComplementModel
{
    /// Degree of the attaching map of each 4-cell onto S^2 (Hopf invariant
    /// multiples); its length is b_2(N).
    IntVector attaching = IntVector(0);

    Index b2() const { return attaching.size(); }
    /// Cells: one 0-cell, one 2-cell, b_2 4-cells.
    std::vector<Index> cell_counts() const { return {1, 0, 1, 0, b2()}; }
    Integer euler_characteristic() const { return Integer(2 + b2()); }
    std::string describe() const;
};

/// H_0 .. H_4 from the cellular chain complex.
std::vector<FgAbGroup> homology_of(const ComplementModel& model);

/**
 * pi_3 of the model as the cokernel of H_4(model) -> H_4(CP^inf) = Z: the
 * classifying map of the 2-cell sends the i-th 4-cell to attaching_i
 * times the generator (its cup square pairs with it that many times).
 * Z when every attaching degree is 0.
 */
FgAbGroup pi3_of(const ComplementModel& model);

/// "S^2 v b*S^4" when the attaching maps are all trivial, else empty.
std::optional<std::string> wedge_form(const ComplementModel& model);

} // namespace bhc

#endif // BHC_COMPLEMENT_HPP
