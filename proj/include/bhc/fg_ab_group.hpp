/**
 * Finitely generated abelian groups in invariant-factor normal form.
 */
#ifndef BHC_FG_AB_GROUP_HPP
#define BHC_FG_AB_GROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhc/scalar.hpp"

namespace bhc {

/**
 * Z^r + Z_{d_1} + ... + Z_{d_k} with d_i >= 2 and d_i | d_{i+1}.
 *
 * The representation is unique, so equality of groups is equality of
 * members. Construction always normalizes.
 */
class FgAbGroup
{
public:
    FgAbGroup() = default;

    /// Normalizes an arbitrary list of cyclic orders; 0 stands for Z and
    /// 1 for the trivial group, negative orders are read as their absolute
    /// value.
    FgAbGroup(std::size_t free_rank, std::span<const Integer> cyclic_orders);
    FgAbGroup(std::size_t free_rank, std::initializer_list<int> cyclic_orders);

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
    /// Z/nZ; cyclic(0) is Z, cyclic(1) the trivial group.
    static FgAbGroup cyclic(const Integer& n);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    /// Number of elements, empty for infinite groups.
    std::optional<Integer> order() const;
    /// Number of cyclic summands in the normal form.
    std::size_t minimal_generators() const { return free_rank_ + torsion_.size(); }

    /// "0", "Z", "Z^2 + Z_2 + Z_12".
    std::string to_string() const;

    bool operator==(const FgAbGroup&) const = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Group presented by generators = rows of m and relations = columns of m.
FgAbGroup cokernel(const IntMatrix& m);

FgAbGroup group_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tensor_product(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b);

/**
 * Homology of a chain complex of free modules.
 *
 * ranks[k] is the rank of C_k; boundaries[k] is the matrix of
 * d_k : C_k -> C_{k-1} (ranks[k-1] x ranks[k]); boundaries[0] is ignored
 * and may be empty. Returns H_0 .. H_top.
 */
std::vector<FgAbGroup> chain_complex_homology(const std::vector<Index>& ranks,
                                              const std::vector<IntMatrix>& boundaries);

/// Parses "0", "Z", "Z^3", "Z_12", "Z/12", "Z + Z_2^2 + Z_24".
FgAbGroup parse_group(const std::string& text);

} // namespace bhc

#endif // BHC_FG_AB_GROUP_HPP
