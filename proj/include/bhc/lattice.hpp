/**
 * Integral symmetric bilinear forms (intersection forms on H_2 of a closed
 * oriented 4-manifold) and the lattice computations the classification
 * needs: signature, parity, characteristic classes of prescribed square,
 * divisibility and splitting off hyperbolic planes.
 */
#ifndef BHC_LATTICE_HPP
#define BHC_LATTICE_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhc/exactalg.hpp"
#include "bhc/scalar.hpp"

namespace bhc {

/// A class in H_2, as coordinates in the basis the Gram matrix is written in.
using H2Class = IntVector;

/// Thrown where a nondegenerate form is required.
class DegenerateFormError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class IntegralLattice
{
public:
    /// The rank-0 lattice.
    IntegralLattice() = default;

    /// Throws std::invalid_argument unless gram is square and symmetric.
    explicit IntegralLattice(IntMatrix gram);

    static IntegralLattice from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static IntegralLattice diagonal(std::initializer_list<int> entries);
    static IntegralLattice hyperbolic();
    /// The negative definite E8 form.
    static IntegralLattice e8_negative();

    Index rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }

    Integer determinant() const { return bhc::determinant(gram_); }
    bool is_unimodular() const { return abs_value(determinant()) == 1; }
    bool is_degenerate() const { return determinant() == 0; }
    Inertia inertia() const { return bhc::inertia(gram_); }

    Integer pairing(const H2Class& x, const H2Class& y) const;
    Integer square(const H2Class& x) const { return pairing(x, x); }

    /// The same form written in the basis given by the columns of u.
    IntegralLattice in_basis(const IntMatrix& u) const;

    bool operator==(const IntegralLattice&) const = default;

private:
    IntMatrix gram_ = IntMatrix(0, 0);
};

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

/// positives - negatives; throws DegenerateFormError for det = 0.
Index signature(const IntegralLattice& l);

/// Every diagonal entry even, i.e. x.x even for all x.
bool is_even(const IntegralLattice& l);

/// x.y = y.y (mod 2) for every y; throws std::invalid_argument on a rank
/// mismatch.
bool is_characteristic(const IntegralLattice& l, const H2Class& x);

enum class Finiteness
{
    Finite,
    PossiblyInfinite,
};

const char* to_string(Finiteness f);

struct CharacteristicEnumeration
{
    Integer target;
    Integer bound;
    Finiteness finiteness = Finiteness::Finite;
    /// Lexicographically sorted.
    std::vector<H2Class> classes;
    /// Set when the indefinite box search was not run because it would
    /// visit more than the candidate limit; classes is then empty.
    bool search_skipped = false;
    Integer box_candidates = 0;
};

/// Box searches larger than this are skipped rather than run.
inline constexpr std::size_t default_candidate_limit = 4'000'000;

/**
 * All characteristic x with x.x = target.
 *
 * Definite forms: a backtracking search over the exact LDL^T
 * factorization; the answer is complete and `bound` is ignored.
 * Indefinite forms: every characteristic x with max |x_i| <= bound. Only
 * the parity coset(s) solving Gx = diag(G) (mod 2) are visited.
 */
CharacteristicEnumeration enumerate_characteristic(const IntegralLattice& l,
                                                   const Integer& target,
                                                   const Integer& bound,
                                                   std::size_t candidate_limit
                                                   = default_candidate_limit);

/// gcd of the coordinates; 0 for the zero class.
Integer divisibility(const H2Class& x);

bool is_primitive(const H2Class& x);

struct HyperbolicSplit
{
    enum class Status
    {
        Split,          // transform exhibits the form as a sum of hyperbolic planes
        NotHyperbolic,  // the form provably is not such a sum
        Inconclusive,   // no isotropic vector found within the search bound
    };

    Status status = Status::Inconclusive;
    /// Unimodular; transform^T * gram * transform is block diagonal with
    /// blocks [[0,1],[1,0]]. Only meaningful for Split.
    IntMatrix transform = IntMatrix(0, 0);
    Index blocks = 0;
    std::string reason;

    bool conclusive() const { return status != Status::Inconclusive; }
};

const char* to_string(HyperbolicSplit::Status s);

inline constexpr int default_split_search_bound = 10;

/// Splits an even unimodular form of signature 0 into hyperbolic planes by
/// repeatedly finding a primitive isotropic vector (by increasing sup-norm)
/// and splitting off the plane it spans with a dual vector.
HyperbolicSplit hyperbolic_split(const IntegralLattice& l,
                                 int search_bound = default_split_search_bound);

} // namespace bhc

#endif // BHC_LATTICE_HPP
