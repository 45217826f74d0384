#include "bhc/classify.hpp"

#include <algorithm>
#include <cctype>

#include "bhc/complement.hpp"
#include "bhc/tables.hpp"

namespace bhc {

FgAbGroup Manifold4Data::h1() const
{
    return FgAbGroup(h1_rank, std::span<const Integer>(h1_torsion));
}

void Manifold4Data::validate() const
{
    const std::string who = "manifold '" + name + "': ";
    if (name.empty())
        throw ValidationError("manifold record has no name");
    for (const Integer& t : h1_torsion)
        if (t < 2)
            throw ValidationError(who + "H_1 torsion entries must be >= 2");
    for (std::size_t i = 1; i < h1_torsion.size(); ++i)
        if (h1_torsion[i] % h1_torsion[i - 1] != 0)
            throw ValidationError(who + "H_1 torsion must be a divisibility chain d_1 | d_2 | ...");
    std::size_t even_torsion = 0;
    for (const Integer& t : h1_torsion)
        if (t % 2 == 0)
            ++even_torsion;
    if (h1_mod2_rank != h1_rank + even_torsion)
        throw ValidationError(who + "dim H_1(N;Z_2) = " + std::to_string(h1_mod2_rank)
                              + " disagrees with H_1(N) = " + h1().to_string() + " (expected "
                              + std::to_string(h1_rank + even_torsion) + ")");
    if (simply_connected && !h1_trivial())
        throw ValidationError(who + "simply connected but H_1(N) = " + h1().to_string());
    if (simply_connected && !orientable)
        throw ValidationError(who + "simply connected manifolds are orientable");
    if (!orientable) {
        if (lattice.rank() != 0)
            throw ValidationError(who + "a non-orientable manifold has no integral intersection form; leave gram empty");
        return;
    }
    if (!lattice.is_unimodular())
        throw ValidationError(who + "intersection form not unimodular (det = " + lattice.determinant().str() + ")");
    if (spin && !is_even(lattice))
        throw ValidationError(who + "spin but the intersection form is odd");
    if (simply_connected && !spin && is_even(lattice))
        throw ValidationError(who + "simply connected with an even form, so w_2 = 0; spin must be true");
}

std::optional<Index> signature_of(const Manifold4Data& m)
{
    const Inertia in = m.lattice.inertia();
    if (in.zero != 0)
        return std::nullopt;
    return in.signature();
}

bool is_square_free(const Integer& s)
{
    const Integer a = abs_value(s);
    if (a == 0)
        return false;
    for (Integer k = 2; k * k <= a; ++k)
        if (a % (k * k) == 0)
            return false;
    return true;
}

namespace {

// Smallest k >= 2 with k^2 | s, for the explanation of a failed gate.
Integer square_divisor(const Integer& s)
{
    const Integer a = abs_value(s);
    if (a == 0)
        return 2;
    for (Integer k = 2; k * k <= a; ++k)
        if (a % (k * k) == 0)
            return k;
    return 0;
}

std::string sigma_text(Index s)
{
    return "sigma = " + std::to_string(s);
}

std::string normalized_name(const std::string& name)
{
    std::string out;
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

bool is_s1xs3(const std::string& name)
{
    const std::string n = normalized_name(name);
    return n == "s1xs3" || n == "s1s3";
}

bool has_retraction_by_name(const std::string& name)
{
    const std::string n = normalized_name(name);
    // S^1 x S^3, and simply-connected spin pieces.
    return is_s1xs3(name) || n == "s2xs2" || n == "s2s2" || n == "s4";
}

} // namespace

Judgement embeds_in_r7(const Manifold4Data& m)
{
    if (m.orientable)
        return {Verdict::Yes, "every closed orientable 4-manifold embeds in R^7 [Hi65, Fu94]"};
    return {Verdict::Undetermined,
            "non-orientable: embeddability in R^7 is equivalent to W_3(N) = 0 (dual class), not implemented"};
}

R6Embedding embeds_in_r6(const Manifold4Data& m)
{
    R6Embedding out;
    if (!m.orientable) {
        out.judgement = {Verdict::Undetermined, "non-orientable: the R^6 criterion is for orientable N"};
        return out;
    }
    const auto sigma = signature_of(m);
    if (!sigma) {
        out.judgement = {Verdict::Undetermined, "degenerate intersection form"};
        return out;
    }

    const bool cond2 = m.spin && *sigma == 0;
    out.spin_and_signature_zero = cond2;
    const Verdict v2 = verdict_of(cond2);
    out.conditions = {
        {"(1) N embeds in R^6", v2},
        {"(2) w_2(N) = 0 and sigma(N) = 0", v2},
        {"(3) normal bundle of every embedding N -> S^7 is trivial", v2},
    };

    if (m.simply_connected) {
        const HyperbolicSplit split = hyperbolic_split(m.lattice);
        Verdict v4 = Verdict::Undetermined;
        if (split.status == HyperbolicSplit::Status::Split)
            v4 = Verdict::Yes;
        else if (split.status == HyperbolicSplit::Status::NotHyperbolic)
            v4 = Verdict::No;
        if (split.conclusive() && v4 != v2)
            throw std::logic_error("internal: condition (2) is " + std::string(to_string(v2))
                                   + " but the hyperbolic splitting says " + to_string(v4) + " for '" + m.name + "'");
        out.conditions.push_back({"(4) intersection form is that of #_i (S^2 x S^2)", v4});
        out.conditions.push_back({"(5) N is homotopy equivalent to #_i (S^2 x S^2)", v4});
        out.conditions.push_back({"(6) N is homeomorphic to #_i (S^2 x S^2)", v4});
        out.certificate = split;
    }

    std::string reason;
    if (cond2) {
        reason = "w_2 = 0 and sigma = 0";
        if (out.certificate && out.certificate->status == HyperbolicSplit::Status::Split)
            reason += "; intersection form splits as " + std::to_string(out.certificate->blocks)
                      + " hyperbolic plane(s)";
    } else if (!m.spin) {
        reason = "w_2(N) != 0";
        if (m.simply_connected)
            reason += " (odd intersection form)";
        if (*sigma != 0)
            reason += " and " + sigma_text(*sigma) + " != 0";
    } else {
        reason = sigma_text(*sigma) + " != 0";
    }
    out.judgement = {verdict_of(cond2), reason};
    return out;
}

Judgement triviality_applicable(const Manifold4Data& m)
{
    if (!m.h1_trivial())
        return {Verdict::No, "H_1(N) = " + m.h1().to_string() + " is nonzero"};
    const auto sigma = signature_of(m);
    if (!sigma)
        return {Verdict::No, "degenerate intersection form"};
    if (!is_square_free(*sigma)) {
        const Integer k = square_divisor(*sigma);
        return {Verdict::No, sigma_text(*sigma) + " is divisible by " + Integer(k * k).str() + " = " + k.str()
                                 + "^2, not free of squares"};
    }
    return {Verdict::Yes, "H_1(N) = 0 and " + sigma_text(*sigma) + " is free of squares"};
}

const char* to_string(IsotopyCount::Kind k)
{
    switch (k) {
    case IsotopyCount::Kind::Exact:
        return "exact";
    case IsotopyCount::Kind::LowerBound:
        return "lower-bound";
    case IsotopyCount::Kind::Undetermined:
        return "undetermined";
    }
    return "?";
}

ClassificationReport classify_r7(const Manifold4Data& m, const Integer& bound, std::size_t candidate_limit)
{
    m.validate();
    if (!m.orientable)
        throw OutOfScope("'" + m.name + "' is non-orientable; the R^7 classification needs an orientable manifold");

    ClassificationReport r;
    r.name = m.name;
    r.signature = signature(m.lattice);
    r.embeds_r7 = embeds_in_r7(m);
    r.embeds_r6 = embeds_in_r6(m);
    r.triviality = triviality_applicable(m);

    r.bh_classes = enumerate_characteristic(m.lattice, Integer(r.signature), bound, candidate_limit);
    r.primitive_count = static_cast<std::size_t>(
        std::count_if(r.bh_classes.classes.begin(), r.bh_classes.classes.end(),
                      [](const H2Class& x) { return is_primitive(x); }));

    r.notes.push_back("image of the Boechat-Haefliger invariant = {x in H_2(N) : x mod 2 = PD w_2(N), x.x = sigma(N)}");
    const Integer found(r.bh_classes.classes.size());
    IsotopyCount& count = r.isotopy_classes;

    if (!m.h1_trivial()) {
        count.kind = IsotopyCount::Kind::Undetermined;
        count.note = "H_1(N) != 0: embeddings with equal invariant are not known to differ by a knot";
    } else if (r.bh_classes.search_skipped) {
        count.kind = IsotopyCount::Kind::Undetermined;
        count.note = "box search skipped: " + r.bh_classes.box_candidates.str() + " candidates exceed the limit "
                     + std::to_string(candidate_limit);
    } else if (r.triviality.yes()) {
        count.value = found;
        if (r.bh_classes.finiteness == Finiteness::Finite) {
            count.kind = IsotopyCount::Kind::Exact;
            count.note = "triviality theorem: E^7(N) is in bijection with the image, which is complete "
                         "(definite form)";
        } else {
            count.kind = IsotopyCount::Kind::LowerBound;
            count.note = "triviality theorem: bijection with the image; indefinite form, family listed within "
                         "the box only, completeness not claimed";
        }
    } else {
        count.kind = IsotopyCount::Kind::Undetermined;
        count.note = "triviality theorem not applicable (" + r.triviality.reason
                     + "); embeddings with the same invariant differ by connected sum with a knot S^4 -> R^7, "
                       "and E^7(S^4) = "
                     + GroupTable::builtin().lookup("E7(S4)").value.to_string() + " may act nontrivially";
        if (r.primitive_count > 0)
            r.notes.push_back(std::to_string(r.primitive_count)
                              + " primitive class(es): each is the invariant of exactly one isotopy class "
                                "(pi_3 of the complement vanishes, so the knot action is trivial there)");
    }

    if (count.kind == IsotopyCount::Kind::Exact && count.value == 2 && m.lattice.rank() == 1)
        r.notes.push_back("unique embedding up to isoposition: the two isotopy classes are exchanged by "
                          "composing with a reflection of R^7");
    if (r.embeds_r6.judgement.yes())
        r.notes.push_back("N embeds in R^6; sigma = 0 is never free of squares, so the triviality theorem "
                          "cannot apply");
    return r;
}

Judgement action_trivial(const Manifold4Data& m)
{
    const Judgement t = triviality_applicable(m);
    if (t.yes())
        return {Verdict::Yes, "triviality theorem: " + t.reason + ", so f # g is isotopic to f for every knot g"};
    const Judgement eff = action_effective(m);
    if (eff.yes())
        return {Verdict::No, "the action is effective: " + eff.reason};
    return {Verdict::Undetermined, "triviality theorem not applicable: " + t.reason};
}

Judgement action_trivial(const Manifold4Data& m, const H2Class& x)
{
    if (x.size() != m.lattice.rank())
        throw std::invalid_argument("class has " + std::to_string(x.size()) + " coordinates, b_2 = "
                                    + std::to_string(m.lattice.rank()));
    std::string caveat;
    const auto sigma = signature_of(m);
    if (m.orientable && sigma && !(is_characteristic(m.lattice, x) && m.lattice.square(x) == *sigma))
        caveat = " (x is not characteristic of square sigma, so no embedding has this invariant)";

    const Judgement t = triviality_applicable(m);
    if (t.yes())
        return {Verdict::Yes, "triviality theorem: " + t.reason + caveat};
    if (!m.h1_trivial())
        return {Verdict::Undetermined, "H_1(N) != 0" + caveat};
    const Integer d = divisibility(x);
    if (d == 1)
        return {Verdict::Yes, "x is primitive, so pi_3(C_f) = Z/1 = 0 and the primitivity theorem applies" + caveat};
    return {Verdict::Undetermined, "divisibility d = " + d.str() + ", pi_3(C_f) = "
                                       + FgAbGroup::cyclic(d).to_string()
                                       + " != 0: primitivity theorem not applicable" + caveat};
}

Judgement suspension_retracts(const Manifold4Data& m)
{
    if (m.suspension_retracts)
        return {verdict_of(*m.suspension_retracts), "asserted in the input record"};
    if (m.spin && m.simply_connected)
        return {Verdict::Yes, "N is spin and simply connected [Mi58]"};
    if (is_s1xs3(m.name))
        return {Verdict::Yes, "N = S^1 x S^3"};
    if (!m.summands.empty()
        && std::all_of(m.summands.begin(), m.summands.end(), has_retraction_by_name))
        return {Verdict::Yes, "connected sum of manifolds with the retraction property"};
    return {Verdict::Undetermined, "not known whether the suspension of N retracts to that of N minus a ball"};
}

Judgement action_effective(const Manifold4Data& m)
{
    const Judgement t = triviality_applicable(m);
    if (t.yes()) {
        const FgAbGroup knots = GroupTable::builtin().lookup("E7(S4)").value;
        if (!knots.is_trivial())
            return {Verdict::No, "the action is trivial (" + t.reason + ") while E^7(S^4) = " + knots.to_string()};
    }
    const R6Embedding r6 = embeds_in_r6(m);
    const Judgement s = suspension_retracts(m);
    if (s.yes() && r6.judgement.yes())
        return {Verdict::Yes, "suspension retracts (" + s.reason + ") and N embeds in R^6 (" + r6.judgement.reason
                                  + "): distinct knots give non-isotopic connected sums with f_0: N -> R^6 c R^7"};
    std::string why;
    if (!s.yes())
        why = "suspension retraction: " + s.reason;
    if (!r6.judgement.yes())
        why += std::string(why.empty() ? "" : "; ") + "N does not embed in R^6 (" + r6.judgement.reason + ")";
    return {Verdict::Undetermined, "effectiveness theorem not applicable: " + why};
}

Judgement compressible(const Manifold4Data& m, const H2Class& x)
{
    if (!m.h1_trivial())
        return {Verdict::Undetermined, "H_1(N) != 0"};
    if (x.size() != m.lattice.rank())
        throw std::invalid_argument("class has " + std::to_string(x.size()) + " coordinates, b_2 = "
                                    + std::to_string(m.lattice.rank()));
    const bool zero = x.isZero();
    const bool d_zero = divisibility(x) == 0;
    const bool pi3_is_z = pi3_of(ComplementModel{x}) == FgAbGroup::free(1);
    if (zero != d_zero || zero != pi3_is_z)
        throw std::logic_error("internal: x = 0, d = 0 and pi_3(C_f) = Z disagree for " + to_string(x));
    if (zero)
        return {Verdict::Yes, "BH(f) = 0, equivalently pi_3(C_f) = Z: PL compressible"};
    return {Verdict::No, "BH(f) = " + to_string(x) + " != 0, pi_3(C_f) = " + pi3_of(ComplementModel{x}).to_string()};
}

KnotTableEntry knot_table(int ambient, int n, const std::optional<Manifold4Data>& data)
{
    KnotTableEntry out;
    const GroupTable& table = GroupTable::builtin();
    // No data means N = S^n.
    const bool sphere = !data || (data->lattice.rank() == 0 && data->h1_trivial() && data->simply_connected);

    if (n == 4 && ambient >= 9) {
        out.value = Integer(1);
        out.source = "#E^m(N) = 1 for m >= 9 (Wu, Haefliger-Hirsch)";
        return out;
    }
    if (n == 4 && ambient == 8) {
        if (!data) {
            out.value = FgAbGroup::trivial();
            out.source = "E^8(S^4) = H_1(S^4; Z_2) = 0";
            return out;
        }
        const std::size_t s = data->h1_mod2_rank;
        if (data->orientable) {
            std::vector<Integer> twos(s, Integer(2));
            out.value = FgAbGroup(0, std::span<const Integer>(twos));
            out.source = "E^8(N) = H_1(N; Z_2) for orientable N (Haefliger-Hirsch, Bausum)";
        } else {
            if (s == 0)
                throw ValidationError("non-orientable manifold with H_1(N; Z_2) = 0");
            std::vector<Integer> twos(s - 1, Integer(2));
            out.value = FgAbGroup(1, std::span<const Integer>(twos));
            out.source = "E^8(N) = Z + Z_2^{s-1} for non-orientable N with H_1(N; Z_2) = Z_2^s";
        }
        return out;
    }
    const std::string key = "E" + std::to_string(ambient) + "(S" + std::to_string(n) + ")";
    if (sphere && ((ambient == 7 && n == 4) || (ambient == 8 && n == 5))) {
        const auto& e = table.lookup(key);
        out.value = e.value;
        out.source = e.key + ": " + e.source;
        return out;
    }
    out.supported = false;
    out.source = "E^" + std::to_string(ambient) + "(" + (sphere ? "S^" + std::to_string(n) : std::string("N"))
                 + ") is not covered by the closed-form table";
    return out;
}

} // namespace bhc
