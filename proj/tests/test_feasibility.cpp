#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ech/feasibility.hpp"
#include "ech/fixtures.hpp"

using namespace ech;
using namespace ech::feas;

namespace {

RelationSystem type_a(const std::vector<std::string>& rels) {
    RelationSystem s;
    s.symbols = {Sym::action("D1"), Sym::action("D2"), Sym::action("E"), Sym::member("P", SSide::minus_theta, true),
                 Sym::successor("P'", "P")};
    for (const auto& r : rels) {
        LinExpr e = LinExpr::parse(r);
        s.relations.push_back(Relation{e.terms, e.constant, Rational(1), r});
    }
    return s;
}

LinExpr value(const Solution& sol, const std::string& name) {
    auto it = sol.values.find(name);
    if (it != sol.values.end()) return it->second;
    return LinExpr::parse(name);  // free parameter
}

}  // namespace

TEST_CASE("action drop contradiction forces P = 0") {
    RelationSystem s = type_a({"P' - P - 2*E", "P' - 2*E"});
    Verdict v = solve(s);
    REQUIRE_FALSE(v.feasible);
    REQUIRE(v.certificate);
    CHECK(v.certificate->kind == CertKind::zero_quantity);
    CHECK(v.certificate->derived == LinExpr::parse("P"));
    CHECK(certificate_consistent(s, *v.certificate));
}

TEST_CASE("type A1 survivor solution") {
    RelationSystem s = type_a({"P' - P - 2*E", "D1 - 2*E", "P + D1 - D2"});
    Verdict v = solve(s);
    REQUIRE(v.feasible);
    REQUIRE(v.solution);
    CHECK(solution_consistent(s, *v.solution));
    CHECK(value(*v.solution, "D1") == LinExpr::parse("P' - P"));
    CHECK(value(*v.solution, "D2") == LinExpr::parse("P'"));
    CHECK(value(*v.solution, "E") == LinExpr::parse("1/2*P' - 1/2*P"));
}

TEST_CASE("type B survivor solution fixes the successor ratio") {
    RelationSystem s = type_a({"D2 - 2*E", "D1 - 2*E", "P' - P + D1 - 2*D2", "D1 + D2 - P"});
    Verdict v = solve(s);
    REQUIRE(v.feasible);
    REQUIRE(v.solution);
    CHECK(solution_consistent(s, *v.solution));
    CHECK(value(*v.solution, "D1") == LinExpr::parse("1/2*P"));
    CHECK(value(*v.solution, "D2") == LinExpr::parse("1/2*P"));
    CHECK(value(*v.solution, "P'") == LinExpr::parse("3/2*P"));
    CHECK(value(*v.solution, "E") == LinExpr::parse("1/4*P"));
    bool even = false;
    for (const auto& n : v.solution->notes) even = even || n.find("even") != std::string::npos;
    CHECK(even);
}

TEST_CASE("successor equal to its base is rejected") {
    RelationSystem s = type_a({"P' - P"});
    Verdict v = solve(s);
    REQUIRE_FALSE(v.feasible);
    CHECK(certificate_consistent(s, *v.certificate));
}

TEST_CASE("underdetermined systems keep free parameters") {
    RelationSystem s = type_a({"D1 - 2*E"});
    Verdict v = solve(s);
    REQUIRE(v.feasible);
    CHECK(v.solution->params.size() >= 2);
    CHECK(solution_consistent(s, *v.solution));
}

TEST_CASE("every fixture case has a sound verdict") {
    size_t n = 0;
    for (const auto& name : fixture_names()) {
        FixtureReport r = run_fixture(name);
        CHECK_MESSAGE(r.match, name);
        for (const auto& c : r.cases) {
            RelationSystem s = build_case(name, c.tuple);
            if (c.verdict.feasible) {
                REQUIRE(c.verdict.solution);
                REQUIRE_MESSAGE(solution_consistent(s, *c.verdict.solution), name, " ", tuple_str(c.tuple));
            } else {
                REQUIRE(c.verdict.certificate);
                REQUIRE_MESSAGE(certificate_consistent(s, *c.verdict.certificate), name, " ", tuple_str(c.tuple));
            }
            ++n;
        }
    }
    CHECK(n > 100);
}

TEST_CASE("linear feasibility") {
    // x > 0, y > 0, x + y < 1
    std::vector<LinearConstraint> cs = {
        {{Rational(1), Rational(0)}, Rational(0), true, false},
        {{Rational(0), Rational(1)}, Rational(0), true, false},
        {{Rational(-1), Rational(-1)}, Rational(1), true, false},
    };
    CHECK(linear_feasible(2, cs));
    cs.push_back({{Rational(1), Rational(1)}, Rational(-1), false, false});  // x + y >= 1
    CHECK_FALSE(linear_feasible(2, cs));
}
