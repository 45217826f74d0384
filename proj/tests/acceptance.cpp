// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "bhc/ahss.hpp"
#include "bhc/cli.hpp"
#include "bhc/complement.hpp"
#include "support.hpp"

using namespace bhc;
using namespace bhc::test;

namespace {

// Pinned limits. All comparisons are exact; only runtimes have a budget.
constexpr double cp2_seconds = 1.0;
constexpr double hyperbolic_seconds = 1.0;
constexpr double pi3_seconds = 5.0;
constexpr double solver_seconds = 30.0;
constexpr double ahss_seconds = 1.0;
constexpr int cp2_max_bound = 25;
constexpr int pi3_trials = 1000;
constexpr int pi3_max_b2 = 6;
constexpr int pi3_max_entry = 20;
constexpr int solver_forms = 200;
constexpr int solver_max_rank = 4;
constexpr int solver_max_entry = 3;
constexpr int solver_max_target = 8;
constexpr int solver_bound = 5;
constexpr int congruence_target_spread = 16;
constexpr int congruence_bound = 3;

struct Outcome
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

const Manifold4Data& record(const std::string& name)
{
    for (const auto& r : builtin_catalog())
        if (r.data.name == name)
            return r.data;
    throw std::runtime_error("catalog has no record " + name);
}

std::string str(const I64Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Outcome cp2_classification()
{
    Outcome o;
    const std::set<I64Vector> expected = {{-1}, {1}};
    for (int bound = 1; bound <= cp2_max_bound; ++bound) {
        const auto r = classify_r7(record("CP2"), bound);
        if (as_set(r.bh_classes.classes) != expected)
            o.fail("bound " + std::to_string(bound) + ": wrong class set");
        if (r.bh_classes.finiteness != Finiteness::Finite)
            o.fail("bound " + std::to_string(bound) + ": not certified finite");
        if (r.isotopy_classes.kind != IsotopyCount::Kind::Exact || r.isotopy_classes.value != 2)
            o.fail("bound " + std::to_string(bound) + ": isotopy count is not exactly 2");
    }
    if (o.pass)
        o.detail = "2 exact classes {(-1),(1)}, finite, bounds 1.." + std::to_string(cp2_max_bound);
    return o;
}

Outcome hyperbolic_image()
{
    Outcome o;
    std::set<I64Vector> expected;
    for (std::int64_t k = -2; k <= 2; ++k)
        for (std::int64_t l = -2; l <= 2; ++l)
            if (k * l == 0)
                expected.insert({2 * k, 2 * l});
    cli::BhImageOptions opt;
    opt.bound = 4;
    opt.format = cli::Format::Machine;
    const auto e = enumerate_characteristic(IntegralLattice::hyperbolic(), 0, 4);
    if (as_set(e.classes) != expected || expected.size() != 9)
        o.fail("class set differs from {(2k,2l): kl=0} in the box");
    if (e.finiteness != Finiteness::PossiblyInfinite)
        o.fail("not flagged possibly-infinite");
    const auto res = cli::cmd_bh_image(IntegralLattice::hyperbolic(), opt);
    if (res.status != cli::exit_ok || res.out.find("\"count\": 9") == std::string::npos
        || res.out.find("possibly-infinite") == std::string::npos)
        o.fail("bh-image command report disagrees");
    if (o.pass)
        o.detail = "9 classes, possibly-infinite";
    return o;
}

Outcome pi3_oracle()
{
    Outcome o;
    std::mt19937_64 rng(20240701);
    std::uniform_int_distribution<int> b2(0, pi3_max_b2);
    std::uniform_int_distribution<int> entry(-pi3_max_entry, pi3_max_entry);
    std::vector<I64Vector> cases = {{0, 0, 0}, {0}, {3, 5}, {1}, {-7, 0, 4}, {}};
    while (static_cast<int>(cases.size()) < pi3_trials) {
        I64Vector x(static_cast<std::size_t>(b2(rng)));
        for (auto& c : x)
            c = entry(rng);
        cases.push_back(x);
    }
    int zero = 0, primitive = 0;
    for (const auto& x : cases) {
        const IntVector xv = from_i64(x);
        const FgAbGroup via_cokernel = pi3_of(ComplementModel{xv});
        const FgAbGroup via_gcd = FgAbGroup::cyclic(divisibility(xv));
        if (via_cokernel != via_gcd || via_gcd != FgAbGroup::cyclic(gcd_all(x)))
            o.fail("disagreement at " + str(x) + ": " + via_cokernel.to_string() + " vs " + via_gcd.to_string());
        const std::int64_t d = gcd_all(x);
        if (d == 0) {
            ++zero;
            if (via_cokernel != FgAbGroup::free(1))
                o.fail("zero vector " + str(x) + " does not give Z");
        }
        if (d == 1) {
            ++primitive;
            if (!via_cokernel.is_trivial())
                o.fail("primitive " + str(x) + " does not give 0");
        }
    }
    if (o.pass)
        o.detail = std::to_string(cases.size()) + " vectors agree (" + std::to_string(zero) + " zero, "
                   + std::to_string(primitive) + " primitive)";
    return o;
}

I64Matrix random_symmetric(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> entry(-solver_max_entry, solver_max_entry);
    I64Matrix g(n, I64Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            g[i][j] = g[j][i] = entry(rng);
    return g;
}

// Adjugate entry (i,i) = cofactor; for det +-1 it is +-(G^{-1})_{ii}.
std::int64_t inverse_diagonal(const I64Matrix& g, std::size_t i)
{
    I64Matrix minor;
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (r == i)
            continue;
        I64Vector row;
        for (std::size_t c = 0; c < g.size(); ++c)
            if (c != i)
                row.push_back(g[r][c]);
        minor.push_back(row);
    }
    return laplace_det(minor) * laplace_det(g);  // det = +-1, so this is (G^{-1})_{ii}
}

bool definite_i64(const I64Matrix& g)
{
    // Sylvester: all leading minors positive, or alternating in sign.
    bool pos = true, neg = true;
    for (std::size_t k = 1; k <= g.size(); ++k) {
        I64Matrix lead(k, I64Vector(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                lead[i][j] = g[i][j];
        const std::int64_t d = laplace_det(lead);
        pos = pos && d > 0;
        neg = neg && (k % 2 == 1 ? d < 0 : d > 0);
    }
    return pos || neg;
}

Outcome characteristic_solver()
{
    Outcome o;
    std::mt19937_64 rng(20240702);
    std::uniform_int_distribution<int> rank(1, solver_max_rank);
    int forms = 0, definite = 0, enumerations = 0;
    std::size_t classes = 0;
    while (forms < solver_forms) {
        const auto g = random_symmetric(rng, static_cast<std::size_t>(rank(rng)));
        const std::int64_t det = laplace_det(g);
        if (det != 1 && det != -1)
            continue;
        ++forms;
        const IntegralLattice l(from_i64(g));
        const bool is_def = definite_i64(g);
        definite += is_def;
        for (int t = -solver_max_target; t <= solver_max_target; ++t) {
            const auto e = enumerate_characteristic(l, t, solver_bound);
            ++enumerations;
            std::int64_t box = solver_bound;
            if (is_def) {
                // |x_i|^2 <= |t| (G^{-1})_{ii} on a definite form
                for (std::size_t i = 0; i < g.size(); ++i) {
                    const double r = std::sqrt(static_cast<double>(std::abs(t))
                                               * static_cast<double>(std::abs(inverse_diagonal(g, i))));
                    box = std::max<std::int64_t>(box, static_cast<std::int64_t>(std::floor(r + 1e-9)));
                }
            }
            const auto expected = brute_force_characteristic(g, t, box);
            if (as_set(e.classes) != expected)
                o.fail("form " + std::to_string(forms) + " target " + std::to_string(t) + ": "
                       + std::to_string(e.classes.size()) + " classes vs " + std::to_string(expected.size()));
            if ((e.finiteness == Finiteness::Finite) != is_def)
                o.fail("finiteness flag wrong on form " + std::to_string(forms));
            classes += expected.size();
        }
    }
    if (o.pass)
        o.detail = std::to_string(forms) + " forms (" + std::to_string(definite) + " definite), "
                   + std::to_string(enumerations) + " enumerations, " + std::to_string(classes) + " classes";
    return o;
}

Outcome mod8_congruence()
{
    Outcome o;
    std::size_t checked = 0, skipped = 0;
    for (const auto& rec : builtin_catalog()) {
        const auto& m = rec.data;
        if (!m.orientable || !m.lattice.is_unimodular())
            continue;
        const Index sigma = signature(m.lattice);
        for (int dt = -congruence_target_spread; dt <= congruence_target_spread; ++dt) {
            const Integer t = sigma + dt;
            const auto e = enumerate_characteristic(m.lattice, t, congruence_bound);
            if (e.search_skipped) {
                ++skipped;
                continue;
            }
            for (const auto& x : e.classes) {
                ++checked;
                const Integer sq = m.lattice.square(x);
                Integer diff = sq - sigma;
                if (diff % 8 != 0)
                    o.fail(m.name + ": class " + to_string(x) + " has square " + sq.str());
                if (!is_characteristic(m.lattice, x))
                    o.fail(m.name + ": class " + to_string(x) + " is not characteristic");
            }
            if (dt % 8 != 0 && !e.classes.empty())
                o.fail(m.name + ": characteristic classes at target " + t.str());
        }
        const auto r = classify_r7(m, congruence_bound);
        for (const auto& x : r.bh_classes.classes)
            if (m.lattice.square(x) != sigma)
                o.fail(m.name + ": image class off the signature");
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " classes satisfy x.x = sigma mod 8; " + std::to_string(skipped)
                   + " searches over the candidate limit skipped (rank 22)";
    return o;
}

Outcome r6_equivalences()
{
    Outcome o;
    int conclusive = 0;
    for (const auto& rec : builtin_catalog()) {
        const auto& m = rec.data;
        if (!m.orientable || !m.simply_connected)
            continue;
        const bool cond2 = is_even(m.lattice) && signature(m.lattice) == 0;
        const auto split = hyperbolic_split(m.lattice);
        if (split.conclusive()) {
            ++conclusive;
            if (cond2 != (split.status == HyperbolicSplit::Status::Split))
                o.fail(m.name + ": condition (2) and the hyperbolic split disagree");
        }
        const auto r6 = embeds_in_r6(m);
        if (r6.judgement.yes() != cond2)
            o.fail(m.name + ": embeds_in_r6 disagrees with condition (2)");
    }
    const auto s = embeds_in_r6(record("S2xS2"));
    if (!s.judgement.yes() || !s.certificate || s.certificate->blocks != 1)
        o.fail("S2xS2 is not certified with one hyperbolic block");
    for (const char* n : {"CP2", "CP2#CP2", "K3"})
        if (!embeds_in_r6(record(n)).judgement.no())
            o.fail(std::string(n) + " should not embed in R^6");
    if (o.pass)
        o.detail = std::to_string(conclusive) + " conclusive splits agree; S2xS2 yes (1 block); CP2, CP2#CP2, K3 no";
    return o;
}

Outcome ahss_reproductions()
{
    Outcome o;
    const auto row = CoefficientRow::bordism_bo5();
    const auto s2 = e2_page(SpaceDescriptor::sphere(2), row, 7);
    if (!s2.nontrivial_on_line(7).empty())
        o.fail("S^2 degree-7 line is not trivial");
    const auto s2a = degree7_after_known_differentials(SpaceDescriptor::sphere(2), row);
    if (s2a.conclusion != "Omega_7(S^2 x BO<5>) = 0")
        o.fail("S^2 conclusion: " + s2a.conclusion);

    const auto cp = e2_page(SpaceDescriptor::complex_projective_infinite(), row, 7);
    const std::vector<std::pair<int, int>> expected = {{4, 3}, {6, 1}};
    if (cp.nontrivial_on_line(7) != expected || cp.at(6, 1) != FgAbGroup::cyclic(2)
        || cp.at(4, 3) != FgAbGroup::cyclic(24))
        o.fail("CP^inf degree-7 line is not exactly E_{6,1} = Z_2, E_{4,3} = Z_24");
    if (sq2_dual_cp(3) != 1 || sq2_dual_cp(2) != 0)
        o.fail("dual Sq^2 coefficients");
    const auto cpa = degree7_after_known_differentials(SpaceDescriptor::complex_projective_infinite(), row);
    if (!cpa.after.at(6, 1).is_trivial() || cpa.upper_bound != FgAbGroup::cyclic(24))
        o.fail("d^2 does not kill E_{6,1}");
    if (o.pass)
        o.detail = "S^2 line trivial; CP^inf E_{6,1} = Z_2 killed (sq2(3)=1, sq2(2)=0), E_{4,3} = Z_24 bound";
    return o;
}

Outcome table_fidelity()
{
    Outcome o;
    const auto& t = GroupTable::builtin();
    const std::vector<std::pair<std::string, FgAbGroup>> expected = {
        {"pi4(G3,SO3)", FgAbGroup::cyclic(12)},
        {"E7(S4)", FgAbGroup::cyclic(12)},
        {"E8(S5)", FgAbGroup::cyclic(2)},
        {"pi4(G,SO)", FgAbGroup::free(1)},
        {"pi5(G,SO)", FgAbGroup()},
        {"Omega0(BO<5>)", FgAbGroup::free(1)},
        {"Omega1(BO<5>)", FgAbGroup::cyclic(2)},
        {"Omega2(BO<5>)", FgAbGroup::cyclic(2)},
        {"Omega3(BO<5>)", FgAbGroup::cyclic(24)},
        {"Omega4(BO<5>)", FgAbGroup()},
        {"Omega5(BO<5>)", FgAbGroup()},
        {"Omega6(BO<5>)", FgAbGroup::cyclic(2)},
        {"Omega7(BO<5>)", FgAbGroup()},
    };
    for (const auto& [key, value] : expected) {
        const auto* e = t.find(key);
        if (!e)
            o.fail(key + " missing");
        else if (e->value != value)
            o.fail(key + " = " + e->value.to_string() + ", expected " + value.to_string());
    }
    for (int n = 3; n <= 19; ++n) {
        const bool exception = n == 6 || n == 7 || n == 9 || n == 15;
        if (nontrivial_action_criterion(n).yes() == exception)
            o.fail("action criterion wrong at n = " + std::to_string(n));
    }
    if (o.pass)
        o.detail = std::to_string(expected.size()) + " entries match; criterion truth table on 3..19 matches";
    return o;
}

Outcome triviality_gate()
{
    Outcome o;
    const auto diagonal = [](int ones) {
        Manifold4Data m;
        m.name = "diag";
        m.lattice = IntegralLattice(IntMatrix::Identity(ones, ones));
        m.simply_connected = true;
        return m;
    };
    if (triviality_applicable(record("S2xS2")).yes())
        o.fail("sigma = 0 reported applicable");
    if (triviality_applicable(diagonal(4)).yes())
        o.fail("sigma = 4 reported applicable");
    for (int s : {1, 2, 3, 5, 6})
        if (!triviality_applicable(diagonal(s)).yes())
            o.fail("sigma = " + std::to_string(s) + " reported inapplicable");
    int r6 = 0;
    for (const auto& rec : builtin_catalog()) {
        if (!rec.data.orientable)
            continue;
        if (embeds_in_r6(rec.data).judgement.yes()) {
            ++r6;
            if (triviality_applicable(rec.data).yes())
                o.fail(rec.data.name + " embeds in R^6 yet passes the gate");
        }
    }
    if (o.pass)
        o.detail = "sigma 0, 4 inapplicable; 1, 2, 3, 5, 6 applicable; " + std::to_string(r6)
                   + " R^6-embeddable records all fail the gate";
    return o;
}

Outcome determinism()
{
    Outcome o;
    cli::ClassifyOptions opt;
    opt.format = cli::Format::Machine;
    const auto a = cli::cmd_classify(builtin_catalog(), opt);
    const auto b = cli::cmd_classify(builtin_catalog(), opt);
    opt.jobs = 4;
    const auto c = cli::cmd_classify(builtin_catalog(), opt);
    if (a.status != cli::exit_ok)
        o.fail("classify failed: " + a.err);
    if (a.out != b.out)
        o.fail("two sequential runs differ");
    if (a.out != c.out)
        o.fail("concurrent run differs from sequential");
    if (o.pass)
        o.detail = std::to_string(a.out.size()) + " bytes identical over 3 runs (1 and 4 jobs)";
    return o;
}

} // namespace

int main()
{
    struct Criterion
    {
        const char* id;
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;  // 0: no runtime budget
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "cp2-two-isotopy-classes", cp2_classification, cp2_seconds},
        {"AC2", "hyperbolic-image-box", hyperbolic_image, hyperbolic_seconds},
        {"AC3", "pi3-cokernel-vs-gcd", pi3_oracle, pi3_seconds},
        {"AC4", "characteristic-solver-vs-brute-force", characteristic_solver, solver_seconds},
        {"AC5", "mod8-congruence", mod8_congruence, 0},
        {"AC6", "r6-condition-equivalences", r6_equivalences, 0},
        {"AC7", "ahss-degree7", ahss_reproductions, ahss_seconds},
        {"AC8", "table-fidelity", table_fidelity, 0},
        {"AC9", "triviality-gate", triviality_gate, 0},
        {"AC10", "deterministic-reports", determinism, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            std::ostringstream os;
            os << "took " << secs << " s, budget " << c.budget_seconds << " s";
            out.fail(os.str());
        }
        std::printf("%s %s %s (%.3f s): %s\n", c.id, out.pass ? "PASS" : "FAIL", c.name, secs, out.detail.c_str());
        failed += out.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
