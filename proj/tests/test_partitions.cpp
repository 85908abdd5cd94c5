#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ech/partitions.hpp"
#include "ech/suite.hpp"

using namespace ech;

namespace {
const ExactReal kTheta = ExactReal::parse("(0+1*sqrt(2))/1-1");
using V = std::vector<i64>;
}  // namespace

TEST_CASE("s_theta examples") {
    CHECK(s_theta(kTheta, 12).members == V{1, 2, 7, 12});
    CHECK(s_theta(-kTheta, 17).members == V{1, 3, 5, 17});
    CHECK(s_theta(kTheta, 1).members == V{1});
    CHECK_THROWS_WITH(s_theta(ExactReal(Rational(1, 3)), 10), "elliptic rotation number must be irrational");
}

TEST_CASE("s_theta matches the quadratic definition") {
    for (const auto& t : suite::random_surds(10, 3)) {
        REQUIRE(s_theta(t, 400).members == suite::s_theta_brute(t, 400));
        REQUIRE(s_theta(-t, 400).members == suite::s_theta_brute(-t, 400));
    }
}

TEST_CASE("SSet queries") {
    SSet s = s_theta(kTheta, 100);
    CHECK(s.contains(7));
    CHECK_FALSE(s.contains(8));
    CHECK(s.max_at_most(11) == 7);
    CHECK(s.successor(7) == 12);
    CHECK(s.largest_gap() >= 5);
}

TEST_CASE("partition_in examples") {
    CHECK(partition_in(kTheta, 0).entries.empty());
    CHECK(partition_in(kTheta, 10).entries == V{7, 2, 1});
    CHECK(partition_in(kTheta, 2).entries == V{2});
    CHECK(partition_out(kTheta, 10).entries == partition_in(-kTheta, 10).entries);
}

TEST_CASE("partition_orbit examples") {
    CHECK(partition_orbit(OrbitKind::positive_hyperbolic, Direction::in, 3).entries == V{1, 1, 1});
    CHECK(partition_orbit(OrbitKind::negative_hyperbolic, Direction::in, 5).entries == V{2, 2, 1});
    CHECK(partition_orbit(OrbitKind::negative_hyperbolic, Direction::out, 4).entries == V{2, 2});
    CHECK(partition_orbit(OrbitKind::elliptic, Direction::in, 10, kTheta).entries == V{7, 2, 1});
    CHECK(partition_orbit(OrbitKind::elliptic, Direction::out, 10, kTheta).entries == partition_out(kTheta, 10).entries);
    CHECK_THROWS(partition_orbit(OrbitKind::elliptic, Direction::in, 3));
}

TEST_CASE("is_initial_segment examples") {
    CHECK(is_initial_segment({{7, 2}}, {{7, 2, 1}}));
    CHECK_FALSE(is_initial_segment({{2, 1}}, {{7, 2, 1}}));
    CHECK(is_initial_segment({}, {{7, 2, 1}}));
    CHECK_FALSE(is_initial_segment({{7, 2, 1, 1}}, {{7, 2, 1}}));
}

TEST_CASE("gap, intersection and successor-gap laws") {
    auto r = suite::sset_laws(10, 500, 5);
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("partition laws") {
    auto r = suite::partition_laws(4, 300, 6);
    CHECK_MESSAGE(r.passed, r.detail);
}
