#include "bhc/lattice.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace bhc {

IntegralLattice::IntegralLattice(IntMatrix gram) : gram_(std::move(gram))
{
    if (gram_.rows() != gram_.cols())
        throw std::invalid_argument("Gram matrix not square");
    if (gram_ != gram_.transpose())
        throw std::invalid_argument("Gram matrix not symmetric");
}

IntegralLattice IntegralLattice::from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
    const Index n = static_cast<Index>(rows.size());
    IntMatrix g(n, n);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != n)
            throw std::invalid_argument("Gram matrix not square");
        Index j = 0;
        for (int v : row)
            g(i, j++) = v;
        ++i;
    }
    return IntegralLattice(std::move(g));
}

IntegralLattice IntegralLattice::diagonal(std::initializer_list<int> entries)
{
    const Index n = static_cast<Index>(entries.size());
    IntMatrix g = IntMatrix::Zero(n, n);
    Index i = 0;
    for (int v : entries) {
        g(i, i) = v;
        ++i;
    }
    return IntegralLattice(std::move(g));
}

IntegralLattice IntegralLattice::hyperbolic()
{
    return from_rows({{0, 1}, {1, 0}});
}

IntegralLattice IntegralLattice::e8_negative()
{
    // Negated Cartan matrix of E8; node 1 is the branch node's short arm.
    IntMatrix g = IntMatrix::Zero(8, 8);
    for (Index i = 0; i < 8; ++i)
        g(i, i) = -2;
    const std::pair<Index, Index> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) {
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return IntegralLattice(std::move(g));
}

Integer IntegralLattice::pairing(const H2Class& x, const H2Class& y) const
{
    if (x.size() != rank() || y.size() != rank())
        throw std::invalid_argument("class has " + std::to_string(x.size()) + " coordinates, lattice rank is "
                                    + std::to_string(rank()));
    return x.dot(gram_ * y);
}

IntegralLattice IntegralLattice::in_basis(const IntMatrix& u) const
{
    if (u.rows() != rank())
        throw std::invalid_argument("basis change has the wrong number of rows");
    return IntegralLattice(IntMatrix(u.transpose() * gram_ * u));
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b)
{
    IntMatrix g = IntMatrix::Zero(a.rank() + b.rank(), a.rank() + b.rank());
    g.topLeftCorner(a.rank(), a.rank()) = a.gram();
    g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
    return IntegralLattice(std::move(g));
}

Index signature(const IntegralLattice& l)
{
    const Inertia in = l.inertia();
    if (in.zero != 0)
        throw DegenerateFormError("degenerate intersection form (det = 0); a closed 4-manifold has a "
                                  "nondegenerate form");
    return in.signature();
}

bool is_even(const IntegralLattice& l)
{
    for (Index i = 0; i < l.rank(); ++i)
        if (l.gram()(i, i) % 2 != 0)
            return false;
    return true;
}

bool is_characteristic(const IntegralLattice& l, const H2Class& x)
{
    if (x.size() != l.rank())
        throw std::invalid_argument("class has " + std::to_string(x.size()) + " coordinates, lattice rank is "
                                    + std::to_string(l.rank()));
    const IntVector gx = l.gram() * x;
    for (Index i = 0; i < l.rank(); ++i)
        if ((gx(i) - l.gram()(i, i)) % 2 != 0)
            return false;
    return true;
}

const char* to_string(Finiteness f)
{
    return f == Finiteness::Finite ? "finite" : "possibly-infinite";
}

namespace {

bool lex_less(const H2Class& a, const H2Class& b)
{
    for (Index i = 0; i < a.size(); ++i) {
        if (a(i) != b(i))
            return a(i) < b(i);
    }
    return false;
}

// Residues r in {0,1}^n with G r = diag(G) (mod 2): a particular solution
// plus the span of the kernel of G mod 2.
std::vector<std::vector<int>> characteristic_residues(const IntMatrix& g)
{
    const Index n = g.rows();
    // Augmented system over GF(2).
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1)));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j)
            a[i][j] = static_cast<int>(abs_value(Integer(g(i, j) % 2)));
        a[i][n] = static_cast<int>(abs_value(Integer(g(i, i) % 2)));
    }

    std::vector<Index> pivot_col;
    Index row = 0;
    for (Index col = 0; col < n && row < n; ++col) {
        Index p = row;
        while (p < n && a[p][col] == 0)
            ++p;
        if (p == n)
            continue;
        std::swap(a[p], a[row]);
        for (Index i = 0; i < n; ++i)
            if (i != row && a[i][col])
                for (Index j = col; j <= n; ++j)
                    a[i][j] ^= a[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    for (Index i = row; i < n; ++i)
        if (a[i][n])
            return {};  // inconsistent: no characteristic vectors

    std::vector<Index> free_cols;
    for (Index c = 0, k = 0; c < n; ++c) {
        if (k < static_cast<Index>(pivot_col.size()) && pivot_col[k] == c)
            ++k;
        else
            free_cols.push_back(c);
    }

    std::vector<std::vector<int>> out;
    const std::size_t combos = std::size_t{1} << free_cols.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        std::vector<int> r(static_cast<std::size_t>(n), 0);
        for (std::size_t f = 0; f < free_cols.size(); ++f)
            r[free_cols[f]] = (mask >> f) & 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) {
            int v = a[k][n];
            for (Index c : free_cols)
                v ^= a[k][c] & r[c];
            r[pivot_col[k]] = v;
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Integers in [-bound, bound] congruent to parity mod 2.
std::vector<Integer> box_values(const Integer& bound, int parity)
{
    std::vector<Integer> v;
    Integer start = -bound;
    if (abs_value(Integer(start % 2)) != parity)
        start += 1;
    for (Integer x = start; x <= bound; x += 2)
        v.push_back(x);
    return v;
}

void enumerate_box(const IntegralLattice& l, const Integer& target, const Integer& bound,
                   std::size_t limit, CharacteristicEnumeration& out)
{
    const IntMatrix& g = l.gram();
    const Index n = l.rank();
    const auto residues = characteristic_residues(g);

    std::vector<std::vector<std::vector<Integer>>> values;
    Integer total = 0;
    for (const auto& r : residues) {
        std::vector<std::vector<Integer>> per_coord;
        Integer count = 1;
        for (Index i = 0; i < n; ++i) {
            per_coord.push_back(box_values(bound, r[i]));
            count *= per_coord.back().size();
        }
        total += count;
        values.push_back(std::move(per_coord));
    }
    out.box_candidates = total;
    if (total > limit) {
        out.search_skipped = true;
        return;
    }

    H2Class x(n);
    // value(k) = quadratic form restricted to the first k coordinates
    std::function<void(Index, const Integer&, const std::vector<std::vector<Integer>>&)> walk =
        [&](Index k, const Integer& value, const std::vector<std::vector<Integer>>& vals) {
            if (k == n) {
                if (value == target)
                    out.classes.push_back(x);
                return;
            }
            for (const Integer& xk : vals[static_cast<std::size_t>(k)]) {
                Integer cross = 0;
                for (Index j = 0; j < k; ++j)
                    cross += g(k, j) * x(j);
                x(k) = xk;
                walk(k + 1, value + g(k, k) * xk * xk + 2 * xk * cross, vals);
            }
        };
    for (const auto& vals : values)
        walk(0, Integer(0), vals);
}

// Unit upper triangular inverse by back substitution.
RatMatrix unit_upper_inverse(const RatMatrix& t)
{
    const Index n = t.rows();
    RatMatrix inv = RatMatrix::Identity(n, n);
    for (Index col = 0; col < n; ++col)
        for (Index i = col - 1; i >= 0; --i) {
            Rational s = 0;
            for (Index k = i + 1; k <= col; ++k)
                s += t(i, k) * inv(k, col);
            inv(i, col) = -s;
        }
    return inv;
}

// Fincke-Pohst style search on a positive definite form: with
// q(x) = sum_i d_i (x_i + sum_{j>i} l_ij x_j)^2, fix coordinates from the
// last one down, each confined to an exact interval by the remaining budget.
void enumerate_definite(const IntegralLattice& l, const Integer& target, bool negate,
                        CharacteristicEnumeration& out)
{
    const Index n = l.rank();
    const IntMatrix g = negate ? IntMatrix(-l.gram()) : l.gram();
    const Integer goal = negate ? Integer(-target) : target;
    if (goal < 0)
        return;

    const auto cd = congruence_diagonalize<Rational>(g);
    const RatMatrix lower = unit_upper_inverse(cd.transform);
    const RatVector& d = cd.diagonal;

    H2Class x = H2Class::Zero(n);
    std::function<void(Index, const Rational&)> walk = [&](Index i, const Rational& budget) {
        if (i < 0) {
            if (budget == 0 && is_characteristic(l, x))
                out.classes.push_back(x);
            return;
        }
        Rational c = 0;
        for (Index j = i + 1; j < n; ++j)
            c += lower(i, j) * Rational(x(j));
        const Integer s = isqrt(floor_rational(budget / d(i)));
        const Integer lo = -floor_rational(c + Rational(s + 1));
        const Integer hi = floor_rational(-c + Rational(s + 1));
        for (Integer xi = lo; xi <= hi; ++xi) {
            const Rational y = Rational(xi) + c;
            const Rational rest = budget - d(i) * y * y;
            if (rest < 0)
                continue;
            x(i) = xi;
            walk(i - 1, rest);
        }
        x(i) = 0;
    };
    walk(n - 1, Rational(goal));
}

} // namespace

CharacteristicEnumeration enumerate_characteristic(const IntegralLattice& l, const Integer& target,
                                                   const Integer& bound, std::size_t candidate_limit)
{
    if (bound < 1)
        throw std::invalid_argument("enumeration bound must be positive");
    const Inertia in = l.inertia();
    if (in.zero != 0)
        throw DegenerateFormError("cannot enumerate characteristic classes of a degenerate form");

    CharacteristicEnumeration out;
    out.target = target;
    out.bound = bound;
    if (in.definite()) {
        out.finiteness = Finiteness::Finite;
        // rank 0 counts as definite: only the empty class, of square 0
        enumerate_definite(l, target, in.negative > 0, out);
    } else {
        out.finiteness = Finiteness::PossiblyInfinite;
        enumerate_box(l, target, bound, candidate_limit, out);
    }
    std::sort(out.classes.begin(), out.classes.end(), lex_less);
    return out;
}

Integer divisibility(const H2Class& x)
{
    Integer d = 0;
    for (Index i = 0; i < x.size(); ++i)
        d = gcd_value(d, x(i));
    return d;
}

bool is_primitive(const H2Class& x)
{
    return divisibility(x) == 1;
}

const char* to_string(HyperbolicSplit::Status s)
{
    switch (s) {
    case HyperbolicSplit::Status::Split:
        return "split";
    case HyperbolicSplit::Status::NotHyperbolic:
        return "not-hyperbolic";
    case HyperbolicSplit::Status::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

namespace {

// Primitive v with v.v = 0, searched shell by shell in the sup-norm. The
// first nonzero coordinate is taken positive.
bool find_isotropic(const IntMatrix& g, int search_bound, IntVector& found)
{
    const Index n = g.rows();
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int r = 1; r <= search_bound; ++r) {
        std::fill(x.begin(), x.end(), -r);
        for (;;) {
            int norm = 0;
            Index lead = -1;
            for (Index i = 0; i < n; ++i) {
                norm = std::max(norm, std::abs(x[i]));
                if (lead < 0 && x[i] != 0)
                    lead = i;
            }
            if (norm == r && x[lead] > 0) {
                IntVector v(n);
                for (Index i = 0; i < n; ++i)
                    v(i) = x[i];
                if (v.dot(g * v) == 0 && is_primitive(v)) {
                    found = v;
                    return true;
                }
            }
            Index k = 0;
            while (k < n && x[k] == r) {
                x[k] = -r;
                ++k;
            }
            if (k == n)
                break;
            ++x[k];
        }
    }
    return false;
}

} // namespace

HyperbolicSplit hyperbolic_split(const IntegralLattice& l, int search_bound)
{
    HyperbolicSplit out;
    const Index n = l.rank();
    if (n == 0) {
        out.status = HyperbolicSplit::Status::Split;
        out.reason = "rank 0: the empty sum";
        return out;
    }
    if (n % 2 != 0) {
        out.status = HyperbolicSplit::Status::NotHyperbolic;
        out.reason = "odd rank";
        return out;
    }
    if (!l.is_unimodular()) {
        out.status = HyperbolicSplit::Status::NotHyperbolic;
        out.reason = "form is not unimodular";
        return out;
    }
    if (!is_even(l)) {
        out.status = HyperbolicSplit::Status::NotHyperbolic;
        out.reason = "form is odd";
        return out;
    }
    if (signature(l) != 0) {
        out.status = HyperbolicSplit::Status::NotHyperbolic;
        out.reason = "signature is nonzero";
        return out;
    }

    const IntMatrix& g = l.gram();
    IntVector v;
    if (!find_isotropic(g, search_bound, v)) {
        out.status = HyperbolicSplit::Status::Inconclusive;
        out.reason = "no primitive isotropic vector with sup-norm <= " + std::to_string(search_bound);
        return out;
    }

    // Dual vector: (Gv).w = 1, possible since Gv is primitive.
    const IntMatrix gv_row = (g * v).transpose();
    const auto row_snf = smith_normal_form(gv_row);
    IntVector w = row_snf.left(0, 0) * row_snf.right.col(0);
    // Make w isotropic: w.w is even, subtract (w.w / 2) v.
    const Integer half = w.dot(g * w) / 2;
    w -= half * v;

    // Orthogonal complement of the plane <v, w>, an integral basis of it.
    IntMatrix pair(2, n);
    pair.row(0) = (g * v).transpose();
    pair.row(1) = (g * w).transpose();
    const auto pair_snf = smith_normal_form(pair);
    const IntMatrix complement = pair_snf.right.rightCols(n - 2);

    IntMatrix u(n, n);
    u.col(0) = v;
    u.col(1) = w;
    if (n > 2) {
        const IntegralLattice rest = l.in_basis(complement);
        const HyperbolicSplit inner = hyperbolic_split(rest, search_bound);
        if (inner.status != HyperbolicSplit::Status::Split) {
            out.status = inner.status;
            out.reason = "complement of the first plane: " + inner.reason;
            return out;
        }
        u.rightCols(n - 2) = complement * inner.transform;
    }

    out.status = HyperbolicSplit::Status::Split;
    out.transform = std::move(u);
    out.blocks = n / 2;
    out.reason = std::to_string(out.blocks) + " hyperbolic plane(s)";
    return out;
}

} // namespace bhc
