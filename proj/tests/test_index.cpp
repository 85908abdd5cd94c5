#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ech/index.hpp"
#include "ech/suite.hpp"

using namespace ech;

namespace {
const ExactReal kTheta = ExactReal::parse("sqrt(2)-1");
SimpleOrbit gamma1() { return SimpleOrbit::elliptic("gamma", ExactReal(1), kTheta); }
SimpleOrbit delta(const std::string& n, ExactReal a = ExactReal(Rational(5, 2)), OrbitKind k = OrbitKind::negative_hyperbolic, i64 cz = -1) {
    return SimpleOrbit::hyperbolic(n, k, a, cz);
}
}  // namespace

TEST_CASE("action is linear in multiplicities") {
    OrbitSet empty;
    CHECK(action(empty) == ExactReal(0));
    OrbitSet a;
    a.add(gamma1(), 3);
    CHECK(action(a) == ExactReal(3));
    OrbitSet b;
    b.add(gamma1(), 2).add(delta("delta"), 1);
    CHECK(action(b) == ExactReal(Rational(9, 2)));
}

TEST_CASE("E and H counts") {
    OrbitSet a;
    a.add(gamma1(), 4).add(delta("d1"), 1).add(delta("d2"), 1);
    CHECK(e_count(a, gamma1()) == 4);
    CHECK(h_count(a) == 2);
    OrbitSet empty;
    CHECK(e_count(empty, gamma1()) == 0);
    CHECK(h_count(empty) == 0);
    OrbitSet d;
    d.add(delta("d"), 1);
    CHECK(e_count(d, gamma1()) == 0);
    CHECK(h_count(d) == 1);
}

TEST_CASE("admissibility") {
    OrbitSet a;
    a.add(delta("d"), 2);
    CHECK_FALSE(a.admissible());
    OrbitSet b;
    b.add(gamma1(), 5).add(delta("d"), 1);
    CHECK(b.admissible());
}

TEST_CASE("cz_power examples") {
    CHECK(cz_power(gamma1(), 1) == 1);
    CHECK(cz_power(gamma1(), 3) == 3);
    CHECK(cz_power(delta("d"), 3) == -3);
    CHECK(cz_sum(gamma1(), 3) == 1 + 1 + 3);
}

TEST_CASE("ech_index examples") {
    OrbitSet a;
    a.add(gamma1(), 1).add(delta("d"), 1);
    CHECK(ech_index(a, a, {0, 0}) == 0);
    OrbitSet g1;
    g1.add(gamma1(), 1);
    OrbitSet empty;
    CHECK(ech_index(g1, empty, {3, 5}) == 3 + 5 + 1);
    OrbitSet g2;
    g2.add(gamma1(), 2);
    CHECK(ech_index(g2, empty, {0, 0}) == 2);
}

TEST_CASE("j0_index examples") {
    OrbitSet a;
    a.add(gamma1(), 2);
    CHECK(j0_index(a, a, {0, 0}) == 0);
    OrbitSet g1;
    g1.add(gamma1(), 1);
    OrbitSet empty;
    CHECK(j0_index(g1, empty, {3, 5}) == -3 + 5);
    OrbitSet g3;
    g3.add(gamma1(), 3);
    CHECK(j0_index(g3, empty, {0, 0}) == 2);
}

TEST_CASE("homology mismatch has no relative class") {
    HomologyGroup g({2});
    OrbitSet a(g), b(g);
    a.add(SimpleOrbit::elliptic("x", ExactReal(1), kTheta, {1}), 1);
    CHECK_THROWS_WITH(ech_index(a, b, {0, 0}), doctest::Contains("no relative class"));
    CHECK_THROWS_WITH(j0_index(a, b, {0, 0}), doctest::Contains("no relative class"));
}

TEST_CASE("parity_check examples") {
    OrbitSet empty;
    OrbitSet g;
    g.add(gamma1(), 2);
    CHECK(parity_check(g, empty, 2));
    CHECK_FALSE(parity_check(g, empty, 1));
    OrbitSet pos;
    pos.add(delta("h", ExactReal(1), OrbitKind::positive_hyperbolic, 0), 1);
    CHECK(parity_check(pos, empty, 1));
    OrbitSet bad;
    bad.add(delta("d"), 2);
    CHECK_THROWS(parity_check(bad, empty, 2));
}

TEST_CASE("topological types") {
    auto t = topo_types(-1);
    REQUIRE(t.size() == 1);
    CHECK(t[0].g == 0);
    CHECK(t[0].k == 1);
    CHECK(t[0].l == 0);
    CHECK(t[0].flag == Realizability::realizable);
    CHECK(topo_types(0).size() == 2);
    auto t1 = topo_types(1);
    REQUIRE(t1.size() == 4);
    size_t excluded = 0;
    for (const auto& x : t1)
        if (x.flag == Realizability::unrealizable) {
            ++excluded;
            CHECK(x.g == 0);
            CHECK(x.k == 1);
            CHECK(x.l == 2);
        }
    CHECK(excluded == 1);
    CHECK_THROWS(topo_types(-2));
    auto r = suite::topo_tables();
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("floor_step examples") {
    CHECK(floor_step(kTheta, 5, 17, 5) == 0);
    CHECK(floor_step(kTheta, 5, 17, 11) == 0);
    CHECK(floor_step(kTheta, 5, 17, 17) == 1);
}

TEST_CASE("floor-step law over random surds") {
    auto r = suite::floor_step_law(5, 500, 9);
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("additivity and parity laws") {
    auto r = suite::index_laws(300, 300, 21);
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("catalog JSON round trip") {
    Catalog c;
    c.group = HomologyGroup({2});
    c.orbits.push_back(SimpleOrbit::elliptic("g", ExactReal(1), kTheta, {0}));
    c.orbits.push_back(SimpleOrbit::hyperbolic("h", OrbitKind::negative_hyperbolic, ExactReal(Rational(3, 2)), -1, {1}));
    nlohmann::json j = c.to_json();
    CHECK(Catalog::from_json(j).to_json() == j);
    CHECK(Catalog::from_json(j).find("h").cz == -1);
}
