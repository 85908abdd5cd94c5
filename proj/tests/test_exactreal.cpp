#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "ech/exactreal.hpp"
#include "ech/suite.hpp"

using ech::ExactReal;
using ech::floor_mul;
using ech::ceil_mul;
using ech::i64;
using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;

namespace {

const ExactReal kTheta = ExactReal::parse("(0+1*sqrt(2))/1-1");

Dec to_dec(const ExactReal& x) {
    ech::SurdForm f = x.surd_form();
    Dec v = Dec(f.a) + Dec(f.b) * boost::multiprecision::sqrt(Dec(f.d));
    return v / Dec(f.c);
}

i64 dec_floor(const Dec& x) { return static_cast<i64>(boost::multiprecision::floor(x)); }

}  // namespace

TEST_CASE("floor_mul examples") {
    CHECK(floor_mul(1, kTheta) == 0);
    CHECK(floor_mul(3, kTheta) == 1);
    CHECK(floor_mul(7, ExactReal(ech::Rational(1, 2))) == 3);
}

TEST_CASE("ceil_mul examples") {
    CHECK(ceil_mul(2, kTheta) == 1);
    CHECK(ceil_mul(1, kTheta) == 1);
    CHECK(ceil_mul(4, ExactReal(ech::Rational(1, 2))) == 2);
}

TEST_CASE("cmp_ceil_fractions examples") {
    CHECK(ech::cmp_ceil_fractions(2, 1, kTheta) == std::strong_ordering::less);
    CHECK(ech::cmp_ceil_fractions(5, 5, kTheta) == std::strong_ordering::equal);
    CHECK(ech::cmp_ceil_fractions(3, 2, kTheta) == std::strong_ordering::greater);
}

TEST_CASE("canonical forms") {
    ExactReal x = ExactReal::parse("(2+4*sqrt(8))/6");  // (1 + 4 sqrt 2)/3
    CHECK(x.is_irrational());
    CHECK(x.radicand() == 2);
    ech::SurdForm f = x.surd_form();
    CHECK(f.a == 1);
    CHECK(f.b == 4);
    CHECK(f.c == 3);
    ExactReal r = ExactReal::parse("6/4");
    CHECK(r.is_rational());
    CHECK(r.as_rational() == ech::Rational(3, 2));
    CHECK(ExactReal::parse("(3+2*sqrt(9))/3") == ExactReal(3));  // perfect square collapses to a rational
    CHECK(ExactReal::parse(kTheta.str()) == kTheta);
    CHECK_THROWS(ExactReal::parse("sqrt("));
}

TEST_CASE("floor and ceil agree with a 200-digit oracle") {
    std::mt19937_64 rng(7);
    std::vector<ExactReal> thetas = ech::suite::random_surds(50, 11);
    size_t checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const ExactReal& t = thetas[static_cast<size_t>(i) % thetas.size()];
        i64 q = std::uniform_int_distribution<i64>(1, 1000000)(rng);
        Dec v = Dec(q) * to_dec(t);
        i64 fl = dec_floor(v);
        REQUIRE(floor_mul(q, t) == fl);
        REQUIRE(ceil_mul(q, t) == fl + 1);
        // negation coherence
        REQUIRE(floor_mul(q, -t) == -ceil_mul(q, t));
        // strict bracketing
        REQUIRE(Dec(fl) < v);
        REQUIRE(v < Dec(fl + 1));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("ceiling-fraction comparison agrees with the oracle") {
    std::mt19937_64 rng(13);
    for (const auto& t : ech::suite::random_surds(20, 17)) {
        for (int i = 0; i < 50; ++i) {
            i64 q = std::uniform_int_distribution<i64>(1, 5000)(rng), q2 = std::uniform_int_distribution<i64>(1, 5000)(rng);
            Dec lhs = boost::multiprecision::ceil(Dec(q) * to_dec(t)) / Dec(q);
            Dec rhs = boost::multiprecision::ceil(Dec(q2) * to_dec(t)) / Dec(q2);
            auto want = lhs < rhs ? std::strong_ordering::less : (rhs < lhs ? std::strong_ordering::greater : std::strong_ordering::equal);
            REQUIRE(ech::cmp_ceil_fractions(q, q2, t) == want);
        }
    }
}

TEST_CASE("arithmetic in the quadratic field") {
    ExactReal s2 = ExactReal::sqrt_of(ech::Rational(2));
    CHECK(s2 * s2 == ExactReal(2));
    CHECK((kTheta + ExactReal(1)) == s2);
    CHECK((ExactReal(1) / kTheta) == s2 + ExactReal(1));  // 1/(sqrt2 - 1) = sqrt2 + 1
    CHECK(kTheta.sign() == 1);
    CHECK((-kTheta).floor() == -1);
    CHECK_THROWS(s2 + ExactReal::sqrt_of(ech::Rational(3)));
}
