#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ech/ellipsoid.hpp"
#include "ech/suite.hpp"

using namespace ech;

namespace {
const ExactReal kS2 = ExactReal::parse("sqrt(2)");

// k-th smallest value of m*a + n*b over the lattice, by direct sorting
ExactReal brute_capacity(const ExactReal& a, const ExactReal& b, i64 k, i64 box) {
    std::vector<ExactReal> v;
    for (i64 m = 0; m <= box; ++m)
        for (i64 n = 0; n <= box; ++n) v.push_back(a * ExactReal(m) + b * ExactReal(n));
    std::sort(v.begin(), v.end());
    return v[static_cast<size_t>(k)];
}
}  // namespace

TEST_CASE("capacity examples") {
    CHECK(capacity(Ellipsoid(ExactReal(1), ExactReal(1)), 1) == ExactReal(1));
    CHECK(capacity(Ellipsoid(ExactReal(1), ExactReal(Rational(11, 10))), 2) == ExactReal(Rational(11, 10)));
    CHECK(capacity(Ellipsoid(ExactReal(1), kS2), 0) == ExactReal(0));
}

TEST_CASE("capacity matches lattice sorting") {
    Ellipsoid E(ExactReal(1), kS2);
    for (i64 k = 0; k <= 1000; k += 37) REQUIRE(capacity(E, k) == brute_capacity(ExactReal(1), kS2, k, 60));
    Ellipsoid F(ExactReal(1), ExactReal(Rational(11, 10)));
    for (i64 k = 0; k <= 1000; k += 41) REQUIRE(capacity(F, k) == brute_capacity(ExactReal(1), ExactReal(Rational(11, 10)), k, 60));
}

TEST_CASE("generator grading") {
    Ellipsoid E(ExactReal(1), kS2);
    CHECK(gen_index(E, {0, 0}) == 0);
    CHECK(gen_index(E, {1, 0}) == 2);
    CHECK(gen_index(E, {0, 1}) == 4);
    auto gens = generators_by_action(E, 200);
    for (size_t k = 0; k < gens.size(); ++k) {
        REQUIRE(gen_index(E, gens[k]) == static_cast<i64>(2 * k));
        REQUIRE(E.value(gens[k].m, gens[k].n) == capacity(E, static_cast<i64>(k)));
    }
    CHECK_THROWS_WITH(gen_index(Ellipsoid(ExactReal(1), ExactReal(2)), {2, 0}), doctest::Contains("degenerate ellipsoid"));
}

TEST_CASE("volume ratio approaches the product of the axes") {
    Ellipsoid E(ExactReal(1), ExactReal(1));
    CHECK(std::abs(static_cast<double>(volume_ratio(E, 20000).approx()) - 1.0) < 0.02);
    Ellipsoid F(ExactReal(1), kS2);
    double d1 = std::abs(static_cast<double>(volume_ratio(F, 2000).approx()) - std::sqrt(2.0));
    double d2 = std::abs(static_cast<double>(volume_ratio(F, 20000).approx()) - std::sqrt(2.0));
    CHECK(d2 < d1);
}

TEST_CASE("capacities scale linearly") {
    Ellipsoid E(ExactReal(2), ExactReal(2) * kS2);
    Ellipsoid F(ExactReal(8), ExactReal(8) * kS2);
    for (i64 k : {1, 5, 50, 500}) CHECK(capacity(F, k) == ExactReal(4) * capacity(E, k));
}

TEST_CASE("lattice_count examples") {
    CHECK(lattice_count(ExactReal(1), ExactReal(1), ExactReal(Rational(5, 2))) == 6);
    CHECK(lattice_count(ExactReal(1), ExactReal(1), ExactReal(0)) == 0);
    CHECK(lattice_count(ExactReal(1), ExactReal(1), ExactReal(-3)) == 0);
    i64 brute = 0;
    for (i64 m = 0; m <= 3; ++m)
        for (i64 n = 0; n <= 3; ++n)
            if (ExactReal(m) + kS2 * ExactReal(n) < ExactReal(3)) ++brute;
    CHECK(lattice_count(ExactReal(1), kS2, ExactReal(3)) == brute);
}

TEST_CASE("density report") {
    Ellipsoid E(ExactReal(1), kS2);
    Catalog c = ellipsoid_catalog(E);
    DensityReport r = density_report(c, ExactReal(40), {}, {0, 1, 2}, {0, 1});
    CHECK(r.total == lattice_count(ExactReal(1), kS2, ExactReal(40)));
    i64 sum = 0;
    for (const auto& [e, n] : r.by_e) sum += n;
    CHECK(sum == r.total);

    Catalog single;
    single.orbits.push_back(SimpleOrbit::elliptic("g", ExactReal(1), ExactReal::parse("sqrt(2)-1")));
    DensityReport s = density_report(single, ExactReal(Rational(7, 2)), {}, {0, 1, 2, 3}, {0});
    CHECK(s.total == 4);  // multiplicities 0..3
    CHECK(s.by_e.at(3) == 1);

    Catalog empty;
    DensityReport z = density_report(empty, ExactReal(10), {}, {0, 1}, {0});
    CHECK(z.total == 0);
    CHECK_FALSE(z.e_ratio.at(0).has_value());
    CHECK_FALSE(z.s_theta_ratio.has_value());
    DensityReport none = density_report(c, ExactReal(0), {}, {0, 1}, {0});
    CHECK(none.total == 0);
    CHECK_FALSE(none.s_theta_ratio.has_value());
}

TEST_CASE("counting laws at reduced scale") {
    auto r = suite::counting_laws(100, 3000, 0.2, 3000, 0.05);
    CHECK_MESSAGE(r.passed, r.detail);
}
