/**
 * The low-degree corner of the Atiyah-Hirzebruch spectral sequence
 * E^2_{i,j} = H_i(X; Omega_j) for bordism of X x BO<5>, on torsion-free
 * base spaces. Only the E^2 page and the d^2 differential into the j = 1
 * row are modeled.
 */
#ifndef BHC_AHSS_HPP
#define BHC_AHSS_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bhc/fg_ab_group.hpp"
#include "bhc/tables.hpp"

namespace bhc {

/// Space kind or degree outside what the engine supports.
class UnsupportedSpace : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int max_homology_degree = 10;

class SpaceDescriptor
{
public:
    enum class Kind
    {
        Point,
        Sphere,
        ComplexProjective,
        Tabulated,  // explicit homology groups
    };

    static SpaceDescriptor point();
    static SpaceDescriptor sphere(int k);
    /// CP^n; complex_projective_infinite() for CP^infinity.
    static SpaceDescriptor complex_projective(int n);
    static SpaceDescriptor complex_projective_infinite();
    /// H_0, H_1, ... as given, zero above. Throws UnsupportedSpace when a
    /// group has torsion.
    static SpaceDescriptor from_homology(std::string name, std::vector<FgAbGroup> homology);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    /// H_i(X; Z) for 0 <= i <= 10.
    FgAbGroup homology(int i) const;

private:
    SpaceDescriptor(Kind kind, int dim, std::string name) : kind_(kind), dim_(dim), name_(std::move(name)) {}

    Kind kind_ = Kind::Point;
    int dim_ = 0;  // sphere dimension, or complex dimension; -1 for CP^inf
    std::string name_;
    std::vector<FgAbGroup> homology_;
};

/// Coefficient groups indexed j = 0..7.
struct CoefficientRow
{
    std::array<FgAbGroup, 8> groups;
    std::string name;
    std::vector<std::string> sources;

    const FgAbGroup& operator[](int j) const { return groups.at(static_cast<std::size_t>(j)); }

    /// Reads entries "<prefix><j><suffix>" for j = 0..7, e.g. prefix
    /// "Omega", suffix "(BO<5>)". Throws NotTabulated if one is missing.
    static CoefficientRow from_table(const GroupTable& table, const std::string& prefix, const std::string& suffix);

    /// Omega_j(BO<5>) from the builtin table.
    static CoefficientRow bordism_bo5();
    /// pi_j of the fiber of BO<5> -> BO from the builtin table.
    static CoefficientRow fiber_bo5();
    static CoefficientRow zero();
};

struct AHSSPage
{
    int page = 2;
    std::map<std::pair<int, int>, FgAbGroup> entries;  // only nontrivial entries are stored

    FgAbGroup at(int i, int j) const;
    void set(int i, int j, FgAbGroup g);
    /// Nontrivial (i, j) with i + j = total, in increasing i.
    std::vector<std::pair<int, int>> nontrivial_on_line(int total) const;
};

/// E^2_{i,j} = H_i(X) (x) Omega_j for all i + j in {total-1, total, total+1}.
/// Throws UnsupportedSpace if total_degree > 8.
AHSSPage e2_page(const SpaceDescriptor& x, const CoefficientRow& row, int total_degree);

inline constexpr int max_total_degree = 8;

/**
 * Coefficient of the dual Steenrod square H_{2k+2}(CP^inf; Z_2) ->
 * H_{2k}(CP^inf; Z_2), obtained by expanding the total square
 * Sq(a^k) = (a + a^2)^k over Z_2 and reading off a^{k+1}. Throws for k < 1.
 */
int sq2_dual_cp(int k);

struct Degree7Analysis
{
    AHSSPage e2;
    AHSSPage after;  // E^2 with the known differentials applied
    std::vector<std::string> differentials;
    /// Order-theoretic bound: sum of surviving entries on the degree-7 line.
    FgAbGroup upper_bound;
    bool vanishes = false;
    std::string conclusion;
    std::vector<std::string> notes;
};

/// Degree-7 line for X in {S^2, CP^inf} after the d^2 : E_{8,0} -> E_{6,1}
/// differential (reduction mod 2 followed by the dual of Sq^2), applied
/// only when the row starts Z, Z_2 as it does for BO<5>.
Degree7Analysis degree7_after_known_differentials(const SpaceDescriptor& x, const CoefficientRow& row);

struct ObstructionGroups
{
    /// groups[i] = H_{4-i}(N) (x) pi_i(F), i = 0..7 (zero for i > 4).
    std::vector<FgAbGroup> groups;
    /// Set when the base homology has torsion; Tor terms are then omitted.
    bool torsion_terms_omitted = false;
};

/// Obstructions to lifting to BO<5>, with base_homology = H_0..H_4 of N.
ObstructionGroups obstruction_groups(const std::vector<FgAbGroup>& base_homology, const CoefficientRow& fiber_row);

} // namespace bhc

#endif // BHC_AHSS_HPP
