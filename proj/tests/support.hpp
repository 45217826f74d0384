// Generators and independent machine-integer oracles shared by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bhc/lattice.hpp"

namespace bhc::test {

using I64Matrix = std::vector<std::vector<std::int64_t>>;
using I64Vector = std::vector<std::int64_t>;

inline I64Matrix to_i64(const IntMatrix& m)
{
    I64Matrix out(static_cast<std::size_t>(m.rows()), I64Vector(static_cast<std::size_t>(m.cols())));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            out[i][j] = static_cast<std::int64_t>(m(i, j));
    return out;
}

inline IntMatrix from_i64(const I64Matrix& m)
{
    const Index r = static_cast<Index>(m.size());
    const Index c = r ? static_cast<Index>(m[0].size()) : 0;
    IntMatrix out(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            out(i, j) = m[i][j];
    return out;
}

inline IntVector from_i64(const I64Vector& v)
{
    IntVector out(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out(static_cast<Index>(i)) = v[i];
    return out;
}

inline I64Vector to_i64(const IntVector& v)
{
    I64Vector out(static_cast<std::size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i)
        out[i] = static_cast<std::int64_t>(v(i));
    return out;
}

/// Cofactor expansion; fine for the small sizes the tests use.
inline std::int64_t laplace_det(const I64Matrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    std::int64_t det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        I64Matrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            I64Vector row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[i][j]);
            minor.push_back(row);
        }
        const std::int64_t term = m[0][c] * laplace_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

inline std::int64_t quad(const I64Matrix& g, const I64Vector& x)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            s += x[i] * g[i][j] * x[j];
    return s;
}

inline bool characteristic_i64(const I64Matrix& g, const I64Vector& x)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += g[i][j] * x[j];
        if (((s - g[i][i]) % 2 + 2) % 2 != 0)
            return false;
    }
    return true;
}

/// Every characteristic x in [-box, box]^n with x.x = target.
inline std::set<I64Vector> brute_force_characteristic(const I64Matrix& g, std::int64_t target, std::int64_t box)
{
    std::set<I64Vector> out;
    const std::size_t n = g.size();
    I64Vector x(n, -box);
    if (n == 0) {
        if (target == 0)
            out.insert(x);
        return out;
    }
    for (;;) {
        if (quad(g, x) == target && characteristic_i64(g, x))
            out.insert(x);
        std::size_t k = 0;
        while (k < n && x[k] == box)
            x[k++] = -box;
        if (k == n)
            break;
        ++x[k];
    }
    return out;
}

/// Product of random elementary matrices; determinant +-1 by construction.
inline I64Matrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps, int max_multiplier = 2)
{
    I64Matrix u(n, I64Vector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        u[i][i] = 1;
    if (n < 2)
        return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> mult(-max_multiplier, max_multiplier);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        if (a == b)
            b = (a + 1) % n;
        switch (kind(rng)) {
        case 0: {
            const int k = mult(rng);
            for (std::size_t r = 0; r < n; ++r)
                u[r][a] += k * u[r][b];
            break;
        }
        case 1:
            for (std::size_t r = 0; r < n; ++r)
                std::swap(u[r][a], u[r][b]);
            break;
        default:
            for (std::size_t r = 0; r < n; ++r)
                u[r][a] = -u[r][a];
            break;
        }
    }
    return u;
}

inline I64Matrix congruent(const I64Matrix& g, const I64Matrix& u)
{
    const std::size_t n = g.size();
    I64Matrix out(n, I64Vector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    out[i][j] += u[k][i] * g[k][l] * u[l][j];
    return out;
}

inline std::int64_t gcd_all(const I64Vector& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = d(rng);
    return m;
}

inline std::set<I64Vector> as_set(const std::vector<H2Class>& classes)
{
    std::set<I64Vector> out;
    for (const auto& c : classes)
        out.insert(to_i64(c));
    return out;
}

} // namespace bhc::test
