#include <catch_amalgamated.hpp>

#include "bhc/catalog.hpp"
#include "bhc/classify.hpp"
#include "bhc/complement.hpp"
#include "support.hpp"

using namespace bhc;
using namespace bhc::test;

namespace {

const Manifold4Data& record(const std::string& name)
{
    for (const auto& r : builtin_catalog())
        if (r.data.name == name)
            return r.data;
    throw std::runtime_error("missing catalog record " + name);
}

Manifold4Data simply_connected(std::string name, IntegralLattice l, bool spin)
{
    Manifold4Data m;
    m.name = std::move(name);
    m.lattice = std::move(l);
    m.spin = spin;
    m.simply_connected = true;
    return m;
}

Manifold4Data diagonal_manifold(int positive, int negative)
{
    IntMatrix g = IntMatrix::Zero(positive + negative, positive + negative);
    for (int i = 0; i < positive + negative; ++i)
        g(i, i) = i < positive ? 1 : -1;
    return simply_connected("diag", IntegralLattice(g), positive + negative == 0);
}

H2Class v(std::initializer_list<int> xs)
{
    H2Class out(static_cast<Index>(xs.size()));
    Index i = 0;
    for (int x : xs)
        out(i++) = x;
    return out;
}

} // namespace

TEST_CASE("validation names the violated invariant", "[classify][validate]")
{
    auto m = simply_connected("X", IntegralLattice::diagonal({2}), false);
    CHECK_THROWS_WITH(m.validate(), Catch::Matchers::ContainsSubstring("not unimodular"));

    m = simply_connected("X", IntegralLattice::diagonal({1}), true);
    CHECK_THROWS_WITH(m.validate(), Catch::Matchers::ContainsSubstring("spin"));

    m = simply_connected("X", IntegralLattice::hyperbolic(), false);
    CHECK_THROWS_AS(m.validate(), ValidationError);  // even and simply connected forces spin

    m = simply_connected("X", IntegralLattice::diagonal({1}), false);
    m.h1_rank = 1;
    m.h1_mod2_rank = 1;
    CHECK_THROWS_AS(m.validate(), ValidationError);

    m = simply_connected("X", IntegralLattice::diagonal({1}), false);
    m.simply_connected = false;
    m.h1_torsion = {Integer(4), Integer(6)};
    m.h1_mod2_rank = 2;
    CHECK_THROWS_AS(m.validate(), ValidationError);  // not a divisibility chain

    m.h1_torsion = {Integer(2), Integer(6)};
    m.h1_mod2_rank = 1;
    CHECK_THROWS_AS(m.validate(), ValidationError);  // mod 2 rank should be 2
    m.h1_mod2_rank = 2;
    CHECK_NOTHROW(m.validate());

    m = simply_connected("", IntegralLattice::diagonal({1}), false);
    CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("square-free signatures", "[classify]")
{
    const std::set<int> expected_free = {1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19};
    for (int s = -20; s <= 20; ++s) {
        const int a = s < 0 ? -s : s;
        bool free = a != 0;
        for (int k = 2; k * k <= a; ++k)
            if (a % (k * k) == 0)
                free = false;
        CHECK(is_square_free(Integer(s)) == free);
        CHECK(is_square_free(Integer(s)) == (expected_free.count(a) == 1));
    }
}

TEST_CASE("embedding in R^7", "[classify]")
{
    CHECK(embeds_in_r7(record("CP2")).yes());
    CHECK(embeds_in_r7(record("S2xS2")).yes());
    CHECK(embeds_in_r7(record("RP4")).verdict == Verdict::Undetermined);
}

TEST_CASE("embedding in R^6", "[classify][r6]")
{
    const auto s = embeds_in_r6(record("S2xS2"));
    CHECK(s.judgement.yes());
    REQUIRE(s.certificate);
    CHECK(s.certificate->blocks == 1);
    CHECK(s.conditions.size() == 6);
    for (const auto& [name, verdict] : s.conditions)
        CHECK(verdict == Verdict::Yes);

    CHECK(embeds_in_r6(record("CP2")).judgement.no());
    CHECK(embeds_in_r6(record("CP2#-CP2")).judgement.no());
    CHECK(embeds_in_r6(record("CP2#CP2")).judgement.no());
    CHECK(embeds_in_r6(record("K3")).judgement.no());
    CHECK(embeds_in_r6(record("S4")).judgement.yes());
    const auto two = embeds_in_r6(record("S2xS2#S2xS2"));
    CHECK(two.judgement.yes());
    CHECK(two.certificate->blocks == 2);
}

TEST_CASE("triviality theorem gate", "[classify][gate]")
{
    CHECK(triviality_applicable(record("CP2")).yes());
    CHECK(triviality_applicable(record("S2xS2")).no());
    CHECK(triviality_applicable(diagonal_manifold(4, 0)).no());
    for (int s : {1, 2, 3, 5, 6})
        CHECK(triviality_applicable(diagonal_manifold(s, 0)).yes());
    CHECK(triviality_applicable(diagonal_manifold(1, 1)).no());
    CHECK(triviality_applicable(record("S1xS3")).no());
}

TEST_CASE("R^6 embeddability excludes the triviality gate", "[classify][gate][property]")
{
    for (const auto& r : builtin_catalog()) {
        if (!r.data.orientable)
            continue;
        if (embeds_in_r6(r.data).judgement.yes())
            CHECK_FALSE(triviality_applicable(r.data).yes());
    }
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            const auto m = diagonal_manifold(p, q);
            m.validate();
            if (embeds_in_r6(m).judgement.yes())
                CHECK_FALSE(triviality_applicable(m).yes());
        }
}

TEST_CASE("classification of the catalog forms", "[classify][classify_r7]")
{
    for (int bound = 1; bound <= 8; ++bound) {
        const auto cp2 = classify_r7(record("CP2"), bound);
        CHECK(cp2.isotopy_classes.kind == IsotopyCount::Kind::Exact);
        CHECK(cp2.isotopy_classes.value == 2);
        CHECK(as_set(cp2.bh_classes.classes) == std::set<I64Vector>{{-1}, {1}});
    }

    const auto s = classify_r7(record("S2xS2"), 4);
    CHECK(s.isotopy_classes.kind == IsotopyCount::Kind::Undetermined);
    CHECK(s.bh_classes.finiteness == Finiteness::PossiblyInfinite);
    CHECK(s.bh_classes.classes.size() == 9);
    for (const auto& x : s.bh_classes.classes)
        CHECK((x(0) == 0 || x(1) == 0));

    const auto d = classify_r7(record("CP2#CP2"), 3);
    CHECK(d.triviality.yes());
    CHECK(d.isotopy_classes.kind == IsotopyCount::Kind::Exact);
    CHECK(d.isotopy_classes.value == 4);
    CHECK(d.primitive_count == 4);

    const auto m = classify_r7(record("CP2#-CP2"), 3);
    CHECK(m.triviality.no());
    CHECK(m.isotopy_classes.kind == IsotopyCount::Kind::Undetermined);

    const auto k3 = classify_r7(record("K3"), 10);
    CHECK(k3.signature == -16);
    CHECK(k3.isotopy_classes.kind == IsotopyCount::Kind::Undetermined);

    CHECK_THROWS_AS(classify_r7(record("RP4"), 3), OutOfScope);
}

TEST_CASE("square-free indefinite forms give a lower bound", "[classify][classify_r7]")
{
    const auto m = diagonal_manifold(2, 1);  // sigma = 1
    const auto r = classify_r7(m, 3);
    CHECK(r.triviality.yes());
    CHECK(r.bh_classes.finiteness == Finiteness::PossiblyInfinite);
    CHECK(r.isotopy_classes.kind == IsotopyCount::Kind::LowerBound);
    CHECK(r.isotopy_classes.value == Integer(r.bh_classes.classes.size()));
}

TEST_CASE("image classes satisfy the mod 8 congruence", "[classify][property]")
{
    for (const auto& rec : builtin_catalog()) {
        if (!rec.data.orientable)
            continue;
        const auto r = classify_r7(rec.data, 3);
        for (const auto& x : r.bh_classes.classes) {
            CHECK(rec.data.lattice.square(x) == r.signature);
            CHECK(is_characteristic(rec.data.lattice, x));
        }
    }
}

TEST_CASE("action triviality", "[classify][action]")
{
    CHECK(action_trivial(record("CP2")).yes());
    CHECK(action_trivial(record("CP2#CP2"), v({1, 0})).yes());
    CHECK(action_trivial(record("CP2#CP2"), v({1, 1})).yes());
    CHECK(action_trivial(record("S2xS2"), v({2, 0})).verdict != Verdict::Yes);
    CHECK(action_trivial(record("S2xS2")).no());  // effective action
    CHECK(action_trivial(record("CP2#-CP2")).verdict == Verdict::Undetermined);
}

TEST_CASE("suspension retraction and effectiveness", "[classify][action]")
{
    CHECK(suspension_retracts(record("S2xS2")).yes());
    CHECK(suspension_retracts(record("S1xS3")).yes());
    CHECK(suspension_retracts(record("CP2")).verdict == Verdict::Undetermined);
    CHECK(action_effective(record("S2xS2")).yes());
    CHECK(action_effective(record("CP2")).no());
    CHECK(action_effective(record("K3")).verdict == Verdict::Undetermined);

    Manifold4Data sum = record("S2xS2#S2xS2");
    sum.summands = {"S2xS2", "S2xS2"};
    CHECK(suspension_retracts(sum).yes());
    Manifold4Data asserted = record("CP2#-CP2");
    asserted.suspension_retracts = false;
    CHECK(suspension_retracts(asserted).no());
}

TEST_CASE("compressibility", "[classify][compress]")
{
    CHECK(compressible(record("S2xS2"), v({0, 0})).yes());
    CHECK(compressible(record("CP2"), v({1})).no());
    CHECK(compressible(record("S2xS2"), v({2, 0})).no());
}

TEST_CASE("compressibility agrees with pi_3 of the complement", "[classify][compress][property]")
{
    std::mt19937_64 rng(0xc0c0a);
    std::uniform_int_distribution<int> coord(-3, 3);
    const auto& m = record("S2xS2");
    for (int trial = 0; trial < 100; ++trial) {
        const H2Class x = v({2 * coord(rng), 0});
        const bool z = pi3_of(ComplementModel{x}) == FgAbGroup::free(1);
        CHECK(compressible(m, x).yes() == z);
    }
}

TEST_CASE("knot tables", "[classify][knots]")
{
    const auto e7 = knot_table(7, 4, std::nullopt);
    REQUIRE(e7.supported);
    CHECK(std::get<FgAbGroup>(e7.value) == FgAbGroup::cyclic(12));
    CHECK(std::get<FgAbGroup>(knot_table(7, 4, record("S4")).value) == FgAbGroup::cyclic(12));
    CHECK(std::get<FgAbGroup>(knot_table(8, 5, std::nullopt).value) == FgAbGroup::cyclic(2));
    CHECK(std::get<Integer>(knot_table(9, 4, record("K3")).value) == 1);
    CHECK(std::get<Integer>(knot_table(12, 4, std::nullopt).value) == 1);

    Manifold4Data two = record("CP2");
    two.simply_connected = false;
    two.h1_torsion = {Integer(2), Integer(2)};
    two.h1_mod2_rank = 2;
    CHECK(std::get<FgAbGroup>(knot_table(8, 4, two).value) == FgAbGroup(0, {2, 2}));
    CHECK(std::get<FgAbGroup>(knot_table(8, 4, record("RP4")).value) == FgAbGroup::free(1));
    CHECK_FALSE(knot_table(7, 4, record("CP2")).supported);
    CHECK_FALSE(knot_table(6, 3, std::nullopt).supported);
}
