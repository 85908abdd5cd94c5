#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ech/fixtures.hpp"

using namespace ech;

namespace {
std::vector<CaseTuple> survivors(const std::string& n) { return run_fixture(n).survivors; }
}  // namespace

TEST_CASE("firstA1 leaves the diagonal") {
    FixtureReport r = run_fixture("firstA1");
    CHECK(r.survivors == std::vector<CaseTuple>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(r.cases.size() - r.survivors.size() == 6);
}

TEST_CASE("restA1 survivors and solutions") {
    FixtureReport r = run_fixture("restA1");
    CHECK(r.survivors == std::vector<CaseTuple>{{1, 1, 2}, {2, 2, 3}});
    for (const auto& c : r.cases)
        if (c.feasible) {
            CHECK(c.solution_mismatch.empty());
            const auto& v = c.verdict.solution->values;
            CHECK(v.at("D1") == feas::LinExpr::parse("P' - P"));
            CHECK(v.at("D2") == feas::LinExpr::parse("P'"));
        }
}

TEST_CASE("type A2 chain of fixtures") {
    CHECK(survivors("afo") == std::vector<CaseTuple>{{3, 3, 1, 2}, {3, 3, 1, 3}, {3, 3, 3, 2}});
    CHECK(survivors("typA2").empty());
    CHECK(survivors("typA3").empty());
}

TEST_CASE("type B survivors") {
    CHECK(survivors("typB") == std::vector<CaseTuple>{{1, 1, 3}, {1, 2, 1}, {1, 2, 3}, {3, 3, 1}, {3, 3, 3}});
    FixtureReport r = run_fixture("typB");
    for (const auto& c : r.cases)
        if (c.feasible) CHECK(c.solution_mismatch.empty());
}

TEST_CASE("exclusion fixtures are fully infeasible") {
    for (const char* n : {"case3", "excA20", "excA02", "excB02", "excB20"}) CHECK_MESSAGE(survivors(n).empty(), n);
}

TEST_CASE("every fixture matches and carries a citation") {
    for (const auto& n : fixture_names()) {
        FixtureReport r = run_fixture(n);
        CHECK_MESSAGE(r.match, n);
        CHECK_FALSE(r.citation.empty());
        nlohmann::json j = to_json(r);
        CHECK(j.at("name") == n);
    }
}

TEST_CASE("unknown fixture") { CHECK_THROWS(run_fixture("nope")); }
