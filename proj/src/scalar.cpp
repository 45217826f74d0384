#include "bhc/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bhc {

Integer floor_rational(const Rational& q)
{
    Integer num = mp::numerator(q);
    Integer den = mp::denominator(q);  // always positive
    Integer f = num / den;
    if (num < 0 && f * den != num)
        f -= 1;
    return f;
}

Integer isqrt(const Integer& n)
{
    if (n < 0)
        throw std::domain_error("isqrt of a negative integer");
    return mp::sqrt(n);
}

Integer parse_integer(const std::string& text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw std::invalid_argument("not an integer: '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("not an integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::string to_string(const IntVector& v)
{
    std::ostringstream os;
    os << '(';
    for (Index i = 0; i < v.size(); ++i) {
        if (i)
            os << ", ";
        os << v(i);
    }
    os << ')';
    return os.str();
}

} // namespace bhc
