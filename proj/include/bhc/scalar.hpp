/**
 * Exact scalar types and the dense matrix aliases used throughout bhc.
 *
 * Eigen 3.4 gave its dense types a const_iterator, which trips the byte
 * container detection in Boost.Multiprecision 1.74 whenever an Eigen
 * expression is tested for convertibility to a multiprecision number. The
 * specialization below makes that trait SFINAE-clean before any Boost
 * multiprecision header is seen.
 */
#ifndef BHC_SCALAR_HPP
#define BHC_SCALAR_HPP

#include <iterator>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/traits/is_byte_container.hpp>

namespace boost::multiprecision::detail {

template <class C>
struct is_byte_container_imp<C, true>
{
    template <class T,
              class = typename std::iterator_traits<typename T::const_iterator>::value_type>
    static constexpr bool check(int)
    {
        using V = std::remove_cv_t<
            typename std::iterator_traits<typename T::const_iterator>::value_type>;
        return std::is_integral_v<V> && sizeof(V) == 1;
    }
    template <class T>
    static constexpr bool check(...) { return false; }

    static const bool value = check<C>(0);
};

} // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace bhc {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves like a plain value inside Eigen expressions.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Exact rational built on Integer.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

using Index = Eigen::Index;

/// Absolute value that works for builtin integers and multiprecision numbers.
template <class Scalar>
Scalar abs_value(const Scalar& x)
{
    return x < Scalar(0) ? Scalar(-x) : x;
}

/// Non-negative gcd; gcd(0, 0) = 0.
template <class Scalar>
Scalar gcd_value(Scalar a, Scalar b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != Scalar(0)) {
        Scalar r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Largest integer not exceeding the rational q.
Integer floor_rational(const Rational& q);

/// Largest integer s with s*s <= n, for n >= 0.
Integer isqrt(const Integer& n);

/// Parse a decimal integer, throwing std::invalid_argument on garbage.
Integer parse_integer(const std::string& text);

/// Integer vector rendered as "(a, b, c)".
std::string to_string(const IntVector& v);

} // namespace bhc

#endif // BHC_SCALAR_HPP
