#include "bhc/fg_ab_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bhc/exactalg.hpp"

namespace bhc {

FgAbGroup::FgAbGroup(std::size_t free_rank, std::span<const Integer> cyclic_orders)
    : free_rank_(free_rank)
{
    std::vector<Integer> finite;
    for (const Integer& n : cyclic_orders) {
        if (n == 0)
            ++free_rank_;
        else if (abs_value(n) != 1)
            finite.push_back(abs_value(n));
    }
    if (finite.empty())
        return;

    // Invariant factors of a diagonal presentation.
    const Index k = static_cast<Index>(finite.size());
    IntMatrix diag = IntMatrix::Zero(k, k);
    for (Index i = 0; i < k; ++i)
        diag(i, i) = finite[static_cast<std::size_t>(i)];
    const auto snf = smith_normal_form(diag);
    for (Index i = 0; i < k; ++i)
        if (snf.diagonal(i, i) > 1)
            torsion_.push_back(snf.diagonal(i, i));
}

FgAbGroup::FgAbGroup(std::size_t free_rank, std::initializer_list<int> cyclic_orders)
{
    std::vector<Integer> orders(cyclic_orders.begin(), cyclic_orders.end());
    *this = FgAbGroup(free_rank, std::span<const Integer>(orders));
}

FgAbGroup FgAbGroup::cyclic(const Integer& n)
{
    const Integer orders[] = {n};
    return FgAbGroup(0, std::span<const Integer>(orders));
}

std::optional<Integer> FgAbGroup::order() const
{
    if (free_rank_ != 0)
        return std::nullopt;
    Integer n = 1;
    for (const Integer& d : torsion_)
        n *= d;
    return n;
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << 'Z';
        if (free_rank_ > 1)
            os << '^' << free_rank_;
        first = false;
    }
    // Repeated factors are written once with an exponent.
    for (std::size_t i = 0; i < torsion_.size();) {
        std::size_t j = i;
        while (j < torsion_.size() && torsion_[j] == torsion_[i])
            ++j;
        if (!first)
            os << " + ";
        os << "Z_" << torsion_[i];
        if (j - i > 1)
            os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

FgAbGroup cokernel(const IntMatrix& m)
{
    const auto snf = smith_normal_form(m);
    const Index diag = std::min(m.rows(), m.cols());
    std::size_t free_rank = static_cast<std::size_t>(m.rows());
    std::vector<Integer> torsion;
    for (Index i = 0; i < diag; ++i) {
        const Integer& d = snf.diagonal(i, i);
        if (d == 0)
            continue;
        --free_rank;
        if (d > 1)
            torsion.push_back(d);
    }
    return FgAbGroup(free_rank, std::span<const Integer>(torsion));
}

FgAbGroup group_sum(const FgAbGroup& a, const FgAbGroup& b)
{
    std::vector<Integer> orders = a.torsion();
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    return FgAbGroup(a.free_rank() + b.free_rank(), std::span<const Integer>(orders));
}

FgAbGroup tensor_product(const FgAbGroup& a, const FgAbGroup& b)
{
    std::vector<Integer> orders;
    for (const Integer& d : a.torsion())
        orders.insert(orders.end(), b.free_rank(), d);
    for (const Integer& e : b.torsion())
        orders.insert(orders.end(), a.free_rank(), e);
    for (const Integer& d : a.torsion())
        for (const Integer& e : b.torsion())
            orders.push_back(gcd_value(d, e));
    return FgAbGroup(a.free_rank() * b.free_rank(), std::span<const Integer>(orders));
}

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b)
{
    std::vector<Integer> orders;
    for (const Integer& d : a.torsion())
        for (const Integer& e : b.torsion())
            orders.push_back(gcd_value(d, e));
    return FgAbGroup(0, std::span<const Integer>(orders));
}

namespace {

struct BoundaryRank
{
    Index rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
};

BoundaryRank boundary_rank(const IntMatrix& d)
{
    BoundaryRank out;
    if (d.size() == 0)
        return out;
    const auto snf = smith_normal_form(d);
    for (Index i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        if (snf.diagonal(i, i) == 0)
            continue;
        ++out.rank;
        if (snf.diagonal(i, i) > 1)
            out.torsion.push_back(snf.diagonal(i, i));
    }
    return out;
}

} // namespace

std::vector<FgAbGroup> chain_complex_homology(const std::vector<Index>& ranks,
                                              const std::vector<IntMatrix>& boundaries)
{
    const std::size_t top = ranks.size();
    std::vector<BoundaryRank> info(top + 1);
    for (std::size_t k = 1; k < top; ++k) {
        if (k >= boundaries.size())
            break;
        const IntMatrix& d = boundaries[k];
        if (d.size() != 0 && (d.rows() != ranks[k - 1] || d.cols() != ranks[k]))
            throw std::invalid_argument("boundary matrix d_" + std::to_string(k) + " has the wrong shape");
        info[k] = boundary_rank(d);
    }
    std::vector<FgAbGroup> out;
    for (std::size_t k = 0; k < top; ++k) {
        const Index free = ranks[k] - info[k].rank - info[k + 1].rank;
        if (free < 0)
            throw std::invalid_argument("boundary ranks exceed chain ranks; d o d != 0?");
        out.emplace_back(static_cast<std::size_t>(free), std::span<const Integer>(info[k + 1].torsion));
    }
    return out;
}

namespace {

std::string strip(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

FgAbGroup parse_group(const std::string& text)
{
    const std::string body = strip(text);
    if (body.empty())
        throw std::invalid_argument("empty group description");
    if (body == "0")
        return {};

    std::size_t free_rank = 0;
    std::vector<Integer> orders;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto plus = body.find('+', pos);
        const std::string term =
            strip(body.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
        if (term.empty() || term[0] != 'Z')
            throw std::invalid_argument("bad group summand '" + term + "' in '" + text + "'");

        std::string rest = term.substr(1);
        std::string exponent = "1";
        Integer order = 0;
        if (!rest.empty() && (rest[0] == '_' || rest[0] == '/')) {
            const auto caret = rest.find('^');
            order = parse_integer(rest.substr(1, caret == std::string::npos ? std::string::npos
                                                                            : caret - 1));
            if (caret != std::string::npos)
                exponent = rest.substr(caret + 1);
            if (order < 0)
                throw std::invalid_argument("negative cyclic order in '" + text + "'");
        } else if (!rest.empty() && rest[0] == '^') {
            exponent = rest.substr(1);
        } else if (!rest.empty()) {
            throw std::invalid_argument("bad group summand '" + term + "' in '" + text + "'");
        }
        const Integer count = parse_integer(exponent);
        if (count < 0)
            throw std::invalid_argument("negative exponent in '" + text + "'");
        for (Integer c = 0; c < count; ++c) {
            if (order == 0)
                ++free_rank;
            else
                orders.push_back(order);
        }
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
    }
    return FgAbGroup(free_rank, std::span<const Integer>(orders));
}

} // namespace bhc
