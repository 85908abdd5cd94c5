// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ech/fixtures.hpp"
#include "ech/suite.hpp"

using namespace ech;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Runtime limits in seconds; 0 means unlimited.
constexpr double kLimitSSets = 10;
constexpr double kLimitFixtures = 5;
constexpr double kLimitVolume = 30;

struct Outcome {
    bool passed;
    std::string detail;
};

// The solved values of a fixture case, after refinement when one applies.
const feas::Solution* case_solution(const CaseResult& c) {
    if (c.refined && c.refined->solution) return &*c.refined->solution;
    return c.verdict.solution ? &*c.verdict.solution : nullptr;
}

bool has_value(const feas::Solution* s, const std::string& sym, const std::string& expr) {
    if (!s) return false;
    auto it = s->values.find(sym);
    return it != s->values.end() && it->second == feas::LinExpr::parse(expr);
}

Outcome case_analysis() {
    suite::CheckResult base = suite::fixture_suite();
    bool ok = base.passed;
    std::string why;
    auto need = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            why += " [" + what + "]";
        }
    };
    FixtureReport first = run_fixture("firstA1");
    need(first.survivors == std::vector<CaseTuple>{{1, 1}, {2, 2}, {3, 3}} && first.cases.size() == 9,
         "firstA1: 6 exclusions, diagonal survivors");
    FixtureReport rest = run_fixture("restA1");
    need(rest.survivors == std::vector<CaseTuple>{{1, 1, 2}, {2, 2, 3}}, "restA1 survivors");
    for (const auto& c : rest.cases)
        if (c.feasible)
            need(has_value(case_solution(c), "D1", "P' - P") && has_value(case_solution(c), "D2", "P'"),
                 "restA1 solution " + tuple_str(c.tuple));
    FixtureReport afo = run_fixture("afo");
    need(afo.survivors == std::vector<CaseTuple>{{3, 3, 1, 2}, {3, 3, 1, 3}, {3, 3, 3, 2}}, "afo survivors");
    FixtureReport a2 = run_fixture("typA2");
    need(a2.survivors.empty() && !a2.cases.empty(), "type A2 eliminated");
    FixtureReport a3 = run_fixture("typA3");
    need(a3.survivors.empty() && a3.cases.size() == 3, "type A3: three infeasible cases");
    FixtureReport b = run_fixture("typB");
    need(b.survivors == std::vector<CaseTuple>{{1, 1, 3}, {1, 2, 1}, {1, 2, 3}, {3, 3, 1}, {3, 3, 3}}, "typB survivors");
    bool saw32 = false, saw43 = false;
    for (const auto& c : b.cases) {
        if (!c.feasible) continue;
        const feas::Solution* s = case_solution(c);
        bool r32 = has_value(s, "P'", "3/2*P") && has_value(s, "D1", "1/2*P") && has_value(s, "D2", "1/2*P");
        bool r43 = has_value(s, "P'", "4/3*P") && has_value(s, "D1", "2/3*P") && has_value(s, "D2", "1/3*P");
        need(r32 || r43, "typB solution " + tuple_str(c.tuple));
        saw32 = saw32 || r32;
        saw43 = saw43 || r43;
    }
    need(saw32 && saw43, "typB shows both successor ratios");
    for (const char* n : {"case3", "excA20", "excA02", "excB02", "excB20"}) need(run_fixture(n).survivors.empty(), n);
    return {ok, base.detail + (why.empty() ? "" : "; failed:" + why)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        double limit;
        std::function<Outcome()> run;
    };
    auto wrap = [](std::function<suite::CheckResult()> f) {
        return [f] {
            suite::CheckResult r = f();
            return Outcome{r.passed, r.detail};
        };
    };
    const std::vector<Criterion> criteria = {
        {1, kLimitSSets, wrap([] { return suite::sset_laws(30, 1000, kSeed); })},
        {2, 0, wrap([] { return suite::partition_laws(10, 500, kSeed); })},
        {3, 0, wrap([] { return suite::floor_step_law(20, 1000, kSeed); })},
        {4, 0, wrap([] { return suite::topo_tables(); })},
        {5, kLimitFixtures, case_analysis},
        {6, 0, wrap([] { return suite::transition_tables(); })},
        {7, kLimitVolume, wrap([] { return suite::volume_law(20000, 200000, 0.02); })},
        {8, 0, wrap([] { return suite::counting_laws(100, 10000, 0.2, 10000, 0.05); })},
        {9, 0, wrap([] { return suite::index_laws(1000, 1000, kSeed); })},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = " (" + std::to_string(secs).substr(0, 5) + " s";
        if (c.limit > 0) {
            timing += ", limit " + std::to_string(static_cast<int>(c.limit)) + " s";
            if (secs >= c.limit) {
                o.passed = false;
                o.detail += "; runtime limit exceeded";
            }
        }
        timing += ")";
        if (!o.passed) ++failures;
        std::printf("%s criterion %d: %s%s\n", o.passed ? "PASS" : "FAIL", c.id, o.detail.c_str(), timing.c_str());
    }
    return failures == 0 ? 0 : 1;
}
