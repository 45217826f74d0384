/**
 * Embeddings of closed 4-manifolds in R^6, R^7 and beyond: which theorems
 * apply to a given manifold and what they say.
 *
 * Every function here degrades to Verdict::Undetermined, with the failed
 * hypothesis named in the reason, instead of guessing.
 */
#ifndef BHC_CLASSIFY_HPP
#define BHC_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bhc/fg_ab_group.hpp"
#include "bhc/lattice.hpp"
#include "bhc/verdict.hpp"

namespace bhc {

/// A Manifold4Data field combination that no closed 4-manifold has.
class ValidationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the part of the theory that is implemented.
class OutOfScope : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

struct Manifold4Data
{
    std::string name;
    IntegralLattice lattice;  // intersection form on H_2(N)/torsion
    std::size_t h1_rank = 0;
    std::vector<Integer> h1_torsion;  // invariant factors
    std::size_t h1_mod2_rank = 0;     // dim H_1(N; Z_2)
    bool orientable = true;
    bool spin = false;  // w_2 = 0
    bool simply_connected = false;
    /// Whether the suspension of N retracts to that of N minus a ball; empty
    /// when unknown.
    std::optional<bool> suspension_retracts;
    /// Names of connected summands, when N is declared a connected sum.
    std::vector<std::string> summands;

    bool h1_trivial() const { return h1_rank == 0 && h1_torsion.empty(); }
    FgAbGroup h1() const;

    /// Throws ValidationError naming the violated invariant.
    void validate() const;
};

/// Signature, or empty for a degenerate form.
std::optional<Index> signature_of(const Manifold4Data& m);

/// |s| not divisible by k^2 for any k >= 2; false for 0.
bool is_square_free(const Integer& s);

Judgement embeds_in_r7(const Manifold4Data& m);

struct R6Embedding
{
    Judgement judgement;
    /// Spin and signature 0.
    bool spin_and_signature_zero = false;
    /// Hyperbolic splitting of the form; set on the simply-connected path.
    std::optional<HyperbolicSplit> certificate;
    /// Values of the six equivalent conditions (embeds in R^6; w_2 = 0 and
    /// sigma = 0; trivial normal bundles; form of #S^2xS^2; homotopy
    /// equivalent / homeomorphic to #S^2xS^2). Entries 4..6 are only
    /// evaluated for simply-connected N.
    std::vector<std::pair<std::string, Verdict>> conditions;
};

/// Smooth embeddability in R^6 of an orientable N.
R6Embedding embeds_in_r6(const Manifold4Data& m);

/// H_1(N) = 0 and square-free signature.
Judgement triviality_applicable(const Manifold4Data& m);

struct IsotopyCount
{
    enum class Kind
    {
        Exact,
        LowerBound,
        Undetermined,
    };
    Kind kind = Kind::Undetermined;
    Integer value = 0;
    std::string note;
};

const char* to_string(IsotopyCount::Kind k);

struct ClassificationReport
{
    std::string name;
    Index signature = 0;
    Judgement embeds_r7;
    R6Embedding embeds_r6;
    Judgement triviality;
    /// Characteristic classes of square sigma: the image of the
    /// Boechat-Haefliger invariant.
    CharacteristicEnumeration bh_classes;
    IsotopyCount isotopy_classes;
    std::size_t primitive_count = 0;
    std::vector<std::string> notes;
};

/// Orientable N only; throws OutOfScope otherwise and DegenerateFormError
/// for a degenerate form.
ClassificationReport classify_r7(const Manifold4Data& m, const Integer& bound,
                                 std::size_t candidate_limit = default_candidate_limit);

/// Whether connected sum with every knot S^4 -> R^7 fixes every embedding.
Judgement action_trivial(const Manifold4Data& m);
/// The same question for the embeddings with Boechat-Haefliger class x.
Judgement action_trivial(const Manifold4Data& m, const H2Class& x);

/// Three-valued suspension retraction property with the known sufficient
/// conditions applied.
Judgement suspension_retracts(const Manifold4Data& m);

/// Whether distinct knots S^4 -> R^7 give distinct connected sums with an
/// embedding that lies in R^6.
Judgement action_effective(const Manifold4Data& m);

/// PL compressibility of an embedding with class x, i.e. x = 0.
Judgement compressible(const Manifold4Data& m, const H2Class& x);

struct KnotTableEntry
{
    /// A group, or a bare cardinality when no group structure is claimed.
    std::variant<FgAbGroup, Integer> value;
    std::string source;
    bool supported = true;
};

/**
 * E^m(N) for the closed-form cases: m >= 9 (one element), m = 8 from
 * H_1(N; Z_2), E^7(S^4) and E^8(S^5) from the group table. n is the
 * dimension of N; data is needed for the m = 8, n = 4 formula and to tell
 * whether N is a sphere. Anything else returns supported = false.
 */
KnotTableEntry knot_table(int ambient, int n, const std::optional<Manifold4Data>& data);

} // namespace bhc

#endif // BHC_CLASSIFY_HPP
