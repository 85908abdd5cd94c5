#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ech/feasibility.hpp"
#include "json.hpp"

namespace ech::trans {

enum class TType { a, a_p, b, b_p, c, c_p };

constexpr std::array<TType, 6> kAllTypes{TType::a, TType::a_p, TType::b, TType::b_p, TType::c, TType::c_p};

std::string to_string(TType t);  // "a", "a'", ...
TType ttype_from_string(const std::string& s);
TType mirror(TType t);
bool primed(TType t);  // primed types step through S_theta, unprimed through S_-theta

// An action value c_base*B + c_succ*B' in units of R, where B is the governing member and B' its successor.
struct ActionExpr {
    Rational c_base;
    Rational c_succ;
    friend bool operator==(const ActionExpr&, const ActionExpr&) = default;
    std::string str(const std::string& base = "B") const;
};

// Hyperbolic orbits of one side of a transition: the delta orbits (fixed) and the values allowed for eta in alpha-hat.
struct SideProfile {
    std::vector<ActionExpr> fixed;
    std::vector<ActionExpr> eta;
};

struct TransitionProfile {
    TType type;
    std::string base;                     // "p_i" or "q_i"
    std::optional<Rational> succ_ratio;   // fixed B'/B (3/2 for b, 4/3 for c)
    std::string larger_e_side;            // "upper" (alpha_{k+1}) or "lower" (alpha_k)
    std::string e_delta;                  // elliptic multiplicity drop
    SideProfile upper;                    // alpha_{k+1}
    SideProfile lower;                    // alpha_k
    std::string largest_f_side;           // side carrying the largest f value among the delta orbits
    ActionExpr largest_f;
    int largest_f_multiplicity_lower_bound = 1;
    int alpha_hat_min = 0;                // from H > 4 on both sides
};

TransitionProfile profile(TType t);

// ---- f-map onto the (1/12) R Z grid ----
struct GridValue {
    i64 index;       // value = index * R / 12
    Rational value;
};
// Nearest grid point within eps_prime (strict); nullopt if none. Throws if eps_prime >= R/24.
std::optional<GridValue> f_grid(const Rational& action, const Rational& R, const Rational& eps_prime);

// ---- compatibility of consecutive transitions ----
enum class Granularity { argument, full };
std::string to_string(Granularity g);
Granularity granularity_from_string(const std::string& s);

// Constraint families applied to one middle orbit set, beyond the baseline
// (largest-value matching, image sizes, S-set rules, step facts).
struct Families {
    bool e_arith = false;  // elliptic multiplicity arithmetic through the middle set
    bool s_order = false;  // relative order of members of the same S-set
    bool full = false;     // bijective matching of all f values with multiplicities
    bool gaps = false;     // successor gaps lie in the opposite S-set and differ from their member
};
Families families_for(TType t1, TType t2, Granularity g);

struct BranchReport {
    std::string description;
    feas::Verdict verdict;
    feas::RelationSystem system;
};

struct PairResult {
    TType t1;  // type of (alpha_{k-1}, alpha_k)
    TType t2;  // type of (alpha_k, alpha_{k+1})
    Granularity granularity;
    Families families;
    feas::Verdict verdict;           // a feasible branch, or the most informative infeasible one
    feas::RelationSystem system;     // system of the reported branch
    std::string branch;              // description of the reported branch
    size_t branches = 0;
    size_t feasible_branches = 0;
    std::string citation;
    bool expected_feasible = false;  // membership in the remaining-pairs list
};

PairResult compatible(TType t1, TType t2, Granularity g = Granularity::argument);
std::vector<PairResult> all_pairs(Granularity g = Granularity::argument);
std::vector<std::pair<TType, TType>> allowed_pairs(Granularity g = Granularity::argument);
const std::vector<std::pair<TType, TType>>& expected_allowed_pairs();

struct ChainResult {
    std::array<TType, 3> types;
    feas::Verdict verdict;
    feas::RelationSystem system;
    std::string branch;
    size_t branches = 0;
};

// Triples whose two consecutive pairs are both allowed at argument granularity, solved jointly
// over both middle orbit sets under the given granularity.
std::vector<ChainResult> chain_check(Granularity g = Granularity::full);

nlohmann::json to_json(const TransitionProfile& p);
nlohmann::json to_json(const PairResult& r);
nlohmann::json to_json(const ChainResult& r);

}  // namespace ech::trans
