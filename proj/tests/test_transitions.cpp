#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ech/transitions.hpp"

using namespace ech;
using namespace ech::trans;

namespace {
using Pair = std::pair<TType, TType>;
const std::vector<PairResult>& argument_pairs() {
    static const std::vector<PairResult> v = all_pairs(Granularity::argument);
    return v;
}
const PairResult& find(TType a, TType b) {
    for (const auto& r : argument_pairs())
        if (r.t1 == a && r.t2 == b) return r;
    throw std::logic_error("missing pair");
}
}  // namespace

TEST_CASE("type names and mirror") {
    for (TType t : kAllTypes) {
        CHECK(ttype_from_string(to_string(t)) == t);
        CHECK(mirror(mirror(t)) == t);
        CHECK(primed(mirror(t)) != primed(t));
    }
    CHECK(to_string(TType::b_p) == "b'");
    CHECK_THROWS(ttype_from_string("d"));
}

TEST_CASE("profile of type a") {
    TransitionProfile p = profile(TType::a);
    CHECK(p.base == "p_i");
    CHECK_FALSE(p.succ_ratio.has_value());
    CHECK(p.upper.fixed == std::vector<ActionExpr>{{Rational(-1), Rational(1)}});  // P' - P
    CHECK(p.lower.fixed == std::vector<ActionExpr>{{Rational(0), Rational(1)}});   // P'
    CHECK(p.upper.eta == std::vector<ActionExpr>{{Rational(0), Rational(1, 2)}, {Rational(-1, 2), Rational(1, 2)}});
    CHECK(p.largest_f == ActionExpr{Rational(0), Rational(1)});
    CHECK(p.largest_f_multiplicity_lower_bound >= 1);
}

TEST_CASE("profile of type b") {
    TransitionProfile p = profile(TType::b);
    CHECK(p.succ_ratio == Rational(3, 2));
    CHECK(p.lower.fixed == std::vector<ActionExpr>{{Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(0)}});
    CHECK(p.lower.eta == std::vector<ActionExpr>{{Rational(1, 2), Rational(0)}, {Rational(1, 4), Rational(0)}});
    CHECK(p.largest_f == ActionExpr{Rational(1, 2), Rational(0)});
    CHECK(p.largest_f_multiplicity_lower_bound == 2);
}

TEST_CASE("profile of type c'") {
    TransitionProfile p = profile(TType::c_p);
    CHECK(p.base == "q_i");
    CHECK(p.succ_ratio == Rational(4, 3));
    CHECK(p.upper.fixed == std::vector<ActionExpr>{{Rational(2, 3), Rational(0)}, {Rational(1, 3), Rational(0)}});
    CHECK(p.upper.eta == std::vector<ActionExpr>{{Rational(1, 2), Rational(0)}, {Rational(1, 6), Rational(0)}});
    CHECK(p.largest_f_side == "upper");
}

TEST_CASE("profiles with a fixed ratio lie on the twelfth grid") {
    for (TType t : kAllTypes) {
        TransitionProfile p = profile(t);
        if (!p.succ_ratio) continue;
        for (const SideProfile* s : {&p.upper, &p.lower})
            for (const auto& v : {s->fixed, s->eta})
                for (const ActionExpr& e : v) {
                    Rational x = (e.c_base + e.c_succ * *p.succ_ratio) * Rational(12);
                    CHECK(x.is_integer());
                }
    }
}

TEST_CASE("f_grid examples") {
    Rational R(7), eps(1, 100);
    auto g = f_grid(R / Rational(2), R, eps);
    REQUIRE(g);
    CHECK(g->index == 6);
    CHECK(g->value == R / Rational(2));
    auto h = f_grid(R / Rational(2) + eps / Rational(2), R, eps);
    REQUIRE(h);
    CHECK(h->index == 6);
    CHECK_FALSE(f_grid(R / Rational(24), R, eps).has_value());
    CHECK_THROWS_WITH(f_grid(R, R, R / Rational(24)), doctest::Contains("ambiguous rounding"));
    CHECK_THROWS(f_grid(R, Rational(0), eps));
    for (i64 n = 1; n < 200; ++n) {
        Rational x = Rational(n, 37) * R;
        auto once = f_grid(x, R, eps);
        if (!once) continue;
        auto twice = f_grid(once->value, R, eps);
        REQUIRE(twice);
        CHECK(twice->index == once->index);
    }
}

TEST_CASE("pair verdicts reproduce the exclusion list") {
    std::set<Pair> allowed, expected(expected_allowed_pairs().begin(), expected_allowed_pairs().end());
    for (const auto& r : argument_pairs())
        if (r.verdict.feasible) allowed.insert({r.t1, r.t2});
    CHECK(argument_pairs().size() == 36);
    CHECK(allowed.size() == 12);
    CHECK(allowed == expected);
    auto ap = allowed_pairs(Granularity::argument);
    CHECK(std::set<Pair>(ap.begin(), ap.end()) == expected);
}

TEST_CASE("mirror symmetry") {
    for (const auto& r : argument_pairs()) CHECK(r.verdict.feasible == find(mirror(r.t2), mirror(r.t1)).verdict.feasible);
}

TEST_CASE("named exclusions") {
    const PairResult& ap_a = find(TType::a_p, TType::a);
    REQUIRE_FALSE(ap_a.verdict.feasible);
    CHECK(ap_a.verdict.certificate->kind == feas::CertKind::cross_set_equality);
    CHECK(ap_a.verdict.certificate->statement.find("Q1' = P2'") != std::string::npos);
    const PairResult& bp_b = find(TType::b_p, TType::b);
    REQUIRE_FALSE(bp_b.verdict.feasible);
    CHECK(bp_b.verdict.certificate->kind == feas::CertKind::cross_set_equality);
    CHECK(bp_b.verdict.certificate->statement.find("Q1 = P2") != std::string::npos);
    CHECK(find(TType::b, TType::a).verdict.feasible);
    for (TType t : kAllTypes) CHECK_FALSE(find(TType::b_p, t).verdict.feasible);
}

TEST_CASE("certificates and solutions re-check exactly") {
    for (const auto& r : argument_pairs()) {
        if (r.verdict.feasible) {
            REQUIRE(r.verdict.solution);
            CHECK(feas::solution_consistent(r.system, *r.verdict.solution));
        } else if (r.verdict.certificate->kind != feas::CertKind::count_mismatch) {
            CHECK_MESSAGE(feas::certificate_consistent(r.system, *r.verdict.certificate), to_string(r.t1), to_string(r.t2));
        }
    }
}

TEST_CASE("chains of allowed pairs") {
    std::vector<ChainResult> full = chain_check(Granularity::full);
    size_t walks = 0;
    auto ap = allowed_pairs(Granularity::argument);
    for (const auto& [a, b] : ap)
        for (const auto& [c, d] : ap)
            if (b == c) ++walks;
    CHECK(full.size() == walks);
    CHECK(walks == 8);
    size_t feasible = 0;
    bool saw_bab = false;
    for (const auto& c : full) {
        CHECK(c.types[0] != TType::b_p);
        CHECK(c.types[1] != TType::b_p);
        if (c.verdict.feasible) ++feasible;
        if (c.types == std::array<TType, 3>{TType::b, TType::a, TType::b_p}) saw_bab = !c.verdict.feasible;
    }
    CHECK(feasible == 0);
    CHECK(saw_bab);
}
