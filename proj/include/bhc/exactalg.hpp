/**
 * Exact integer linear algebra: Smith normal form, fraction-free
 * determinants and congruence diagonalization of symmetric forms.
 *
 * Everything here is templated on the scalar so the same routines run on
 * bhc::Integer (the production path) and on builtin integers in tests.
 */
#ifndef BHC_EXACTALG_HPP
#define BHC_EXACTALG_HPP

#include <stdexcept>
#include <utility>

#include "bhc/scalar.hpp"

namespace bhc {

template <class Scalar>
struct SmithDecomposition
{
    MatrixX<Scalar> diagonal;
    MatrixX<Scalar> left;   // rows x rows, unimodular
    MatrixX<Scalar> right;  // cols x cols, unimodular
};

namespace detail {

template <class Scalar>
void swap_rows(MatrixX<Scalar>& a, Index i, Index j)
{
    if (i != j)
        a.row(i).swap(a.row(j));
}

template <class Scalar>
void swap_cols(MatrixX<Scalar>& a, Index i, Index j)
{
    if (i != j)
        a.col(i).swap(a.col(j));
}

// Position of a nonzero entry of least absolute value in the trailing block
// starting at (t, t); returns false when that block is zero.
template <class Scalar>
bool find_smallest_pivot(const MatrixX<Scalar>& d, Index t, Index& pi, Index& pj)
{
    bool found = false;
    Scalar best(0);
    for (Index j = t; j < d.cols(); ++j) {
        for (Index i = t; i < d.rows(); ++i) {
            if (d(i, j) == Scalar(0))
                continue;
            Scalar a = abs_value(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

} // namespace detail

/**
 * Smith normal form with both unimodular transforms.
 *
 * Returns (D, L, R) with L * m * R = D, D diagonal with non-negative
 * entries d_0 | d_1 | ... and L, R invertible over the integers. Zero
 * diagonal entries, if any, come last.
 */
template <class Derived>
SmithDecomposition<typename Derived::Scalar>
smith_normal_form(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Index rows = m.rows();
    const Index cols = m.cols();

    SmithDecomposition<Scalar> out;
    MatrixX<Scalar>& d = out.diagonal;
    MatrixX<Scalar>& left = out.left;
    MatrixX<Scalar>& right = out.right;
    d = m;
    left = MatrixX<Scalar>::Identity(rows, rows);
    right = MatrixX<Scalar>::Identity(cols, cols);

    const Index n = std::min(rows, cols);
    for (Index t = 0; t < n; ++t) {
        Index pi = t, pj = t;
        if (!detail::find_smallest_pivot(d, t, pi, pj))
            break;
        detail::swap_rows(d, t, pi);
        detail::swap_rows(left, t, pi);
        detail::swap_cols(d, t, pj);
        detail::swap_cols(right, t, pj);

        for (;;) {
            bool restart = false;

            // Clear column t below the pivot.
            for (Index i = t + 1; i < rows && !restart; ++i) {
                if (d(i, t) == Scalar(0))
                    continue;
                Scalar q = d(i, t) / d(t, t);
                d.row(i) -= q * d.row(t);
                left.row(i) -= q * left.row(t);
                if (d(i, t) != Scalar(0)) {
                    detail::swap_rows(d, t, i);
                    detail::swap_rows(left, t, i);
                    restart = true;
                }
            }
            if (restart)
                continue;

            // Clear row t right of the pivot.
            for (Index j = t + 1; j < cols && !restart; ++j) {
                if (d(t, j) == Scalar(0))
                    continue;
                Scalar q = d(t, j) / d(t, t);
                d.col(j) -= q * d.col(t);
                right.col(j) -= q * right.col(t);
                if (d(t, j) != Scalar(0)) {
                    detail::swap_cols(d, t, j);
                    detail::swap_cols(right, t, j);
                    restart = true;
                }
            }
            if (restart)
                continue;

            // Divisibility: the pivot must divide the whole trailing block.
            Index bad_row = -1;
            for (Index i = t + 1; i < rows && bad_row < 0; ++i)
                for (Index j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != Scalar(0)) {
                        bad_row = i;
                        break;
                    }
            if (bad_row < 0)
                break;
            d.row(t) += d.row(bad_row);
            left.row(t) += left.row(bad_row);
        }

        if (d(t, t) < Scalar(0)) {
            d.row(t) = -d.row(t);
            left.row(t) = -left.row(t);
        }
    }
    return out;
}

/// Exact determinant by Bareiss fraction-free elimination.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const Index n = m.rows();
    if (n == 0)
        return Scalar(1);

    MatrixX<Scalar> a = m;
    Scalar sign(1);
    Scalar prev(1);
    for (Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == Scalar(0)) {
            Index swap = -1;
            for (Index i = k + 1; i < n; ++i)
                if (a(i, k) != Scalar(0)) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return Scalar(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m)
{
    return m.rows() == m.cols() && m == m.transpose();
}

template <class Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        return false;
    return abs_value(determinant(m)) == Scalar(1);
}

/// Sylvester inertia of a symmetric form.
struct Inertia
{
    Index positive = 0;
    Index negative = 0;
    Index zero = 0;

    Index signature() const { return positive - negative; }
    bool definite() const { return zero == 0 && (positive == 0 || negative == 0); }
    bool operator==(const Inertia&) const = default;
};

template <class Field>
struct CongruenceDiagonalization
{
    VectorX<Field> diagonal;
    MatrixX<Field> transform;  // transform^T * g * transform = diag(diagonal)

    Inertia inertia() const
    {
        Inertia in;
        for (Index i = 0; i < diagonal.size(); ++i) {
            if (diagonal(i) > Field(0))
                ++in.positive;
            else if (diagonal(i) < Field(0))
                ++in.negative;
            else
                ++in.zero;
        }
        return in;
    }
};

/**
 * Symmetric Gaussian elimination over an exact field.
 *
 * Row and column operations are applied in pairs so the result stays
 * congruent to g. When every remaining diagonal entry vanishes but some
 * off-diagonal entry a_kj does not, adding e_j to e_k creates the pivot
 * 2 a_kj; that 2x2 hyperbolic block then contributes one positive and one
 * negative entry. For a definite form no pivoting happens and the transform
 * is unit upper triangular.
 */
template <class Field = Rational, class Derived>
CongruenceDiagonalization<Field>
congruence_diagonalize(const Eigen::MatrixBase<Derived>& g)
{
    if (!is_symmetric(g))
        throw std::invalid_argument("congruence diagonalization needs a symmetric matrix");

    const Index n = g.rows();
    MatrixX<Field> a = g.template cast<Field>();
    MatrixX<Field> t = MatrixX<Field>::Identity(n, n);

    for (Index k = 0; k < n; ++k) {
        if (a(k, k) == Field(0)) {
            Index diag = -1;
            for (Index j = k + 1; j < n; ++j)
                if (a(j, j) != Field(0)) {
                    diag = j;
                    break;
                }
            if (diag >= 0) {
                a.row(k).swap(a.row(diag));
                a.col(k).swap(a.col(diag));
                t.col(k).swap(t.col(diag));
            } else {
                Index off = -1;
                for (Index j = k + 1; j < n; ++j)
                    if (a(k, j) != Field(0)) {
                        off = j;
                        break;
                    }
                if (off < 0)
                    continue;  // row k is zero: a null direction
                a.row(k) += a.row(off);
                a.col(k) += a.col(off);
                t.col(k) += t.col(off);
            }
        }
        const Field pivot = a(k, k);
        for (Index i = k + 1; i < n; ++i) {
            if (a(i, k) == Field(0))
                continue;
            const Field f = a(i, k) / pivot;
            a.row(i) -= f * a.row(k);
            a.col(i) -= f * a.col(k);
            t.col(i) -= f * t.col(k);
        }
    }

    CongruenceDiagonalization<Field> out;
    out.diagonal = a.diagonal();
    out.transform = std::move(t);
    return out;
}

template <class Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& g)
{
    return congruence_diagonalize<Rational>(g.template cast<Integer>()).inertia();
}

} // namespace bhc

#endif // BHC_EXACTALG_HPP
