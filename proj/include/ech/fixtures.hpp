#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ech/feasibility.hpp"
#include "json.hpp"

namespace ech {

using CaseTuple = std::vector<int>;  // 1-based option index per family

struct CaseResult {
    CaseTuple tuple;
    bool expected_feasible = false;
    feas::RelationSystem system;
    feas::Verdict verdict;                  // verdict of the unrefined system
    std::vector<size_t> refine_feasible;    // 1-based refine options that stay feasible
    std::optional<feas::Verdict> refined;   // verdict of the first feasible refinement
    std::vector<std::string> solution_mismatch;
    bool feasible = false;                  // final verdict after refinement
    bool match = false;
};

struct FixtureReport {
    std::string name;
    std::string citation;
    std::vector<std::string> families;
    std::optional<std::string> refine;
    std::vector<CaseResult> cases;
    std::vector<CaseTuple> expected_survivors;
    std::vector<CaseTuple> survivors;
    bool match = false;
};

// The registry shipped with the library (data/fixtures.json).
const nlohmann::json& fixture_registry();
std::vector<std::string> fixture_names(const nlohmann::json& registry = fixture_registry());

FixtureReport run_fixture(const std::string& name, const nlohmann::json& registry = fixture_registry());
// Builds the system of one case without solving it.
feas::RelationSystem build_case(const std::string& name, const CaseTuple& tuple,
                                const nlohmann::json& registry = fixture_registry());

std::string tuple_str(const CaseTuple& t);
nlohmann::json to_json(const FixtureReport& r, bool with_cases = true);

}  // namespace ech
