#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ech/rational.hpp"
#include "json.hpp"

namespace ech::feas {

enum class SymKind { action, s_member, s_successor, multiplicity };
enum class SSide { theta, minus_theta };

SSide opposite(SSide s);
std::string to_string(SymKind k);
std::string to_string(SSide s);

struct Sym {
    std::string name;
    SymKind kind = SymKind::action;
    SSide set = SSide::minus_theta;  // members only; successors inherit from their base
    std::string base;                // successors only
    bool gt_one = false;             // member known to exceed 1
    bool gap_gt_one = false;         // successor whose gap to its base is known to exceed 1
    std::string note;                // provenance of the flags

    static Sym action(std::string n) { return make(std::move(n), SymKind::action); }
    static Sym member(std::string n, SSide s, bool gt1) {
        Sym y = make(std::move(n), SymKind::s_member);
        y.set = s;
        y.gt_one = gt1;
        return y;
    }
    static Sym successor(std::string n, std::string b, bool gap_gt1 = false) {
        Sym y = make(std::move(n), SymKind::s_successor);
        y.base = std::move(b);
        y.gap_gt_one = gap_gt1;
        return y;
    }
    static Sym multiplicity(std::string n) { return make(std::move(n), SymKind::multiplicity); }
    static Sym make(std::string n, SymKind k) {
        Sym y;
        y.name = std::move(n);
        y.kind = k;
        return y;
    }
    bool is_integer() const { return kind != SymKind::action; }
};

using LinForm = std::map<std::string, Rational>;

// sum c_i x_i + constant, pruned of zero coefficients
struct LinExpr {
    LinForm terms;
    Rational constant;

    bool is_zero() const { return terms.empty() && constant.is_zero(); }
    std::string str() const;
    static LinExpr parse(const std::string& text);
    friend bool operator==(const LinExpr&, const LinExpr&) = default;
};

// |sum c_i x_i + constant| < eps * epsilon. eps = 0 marks an exact structural equation.
struct Relation {
    LinForm coeffs;
    Rational constant;
    Rational eps{1};
    std::string label;
};

// sum c_i x_i + constant > 0 (strict) or >= 0
struct Inequality {
    LinForm coeffs;
    Rational constant;
    bool strict = true;
    std::string label;
};

// sum c_i x_i + constant != 0
struct Disequality {
    LinForm coeffs;
    Rational constant;
    std::string label;
};

struct RelationSystem {
    std::vector<Sym> symbols;
    std::vector<Relation> relations;
    std::vector<Inequality> inequalities;
    std::vector<Disequality> disequalities;
    // successor gaps lie in the opposite S-set and differ from their base member above 1
    bool gap_rules = true;

    const Sym& sym(const std::string& name) const;
    bool has(const std::string& name) const;
    void validate() const;
};

enum class CertKind {
    inconsistent,
    zero_quantity,
    nonpositive_quantity,
    successor_equals_base,
    successor_gap_equals_base,
    cross_set_equality,
    disequality_violated,
    inequality_conflict,
    count_mismatch,  // multiplicity counts of matched values cannot agree
};
std::string to_string(CertKind k);

struct Certificate {
    CertKind kind = CertKind::inconsistent;
    std::string statement;
    // derived exact equation: derived == 0 on every solution of the limit system
    std::optional<LinExpr> derived;
    // multipliers on input relations (by index) producing `derived`
    std::vector<std::pair<size_t, Rational>> combination;
    // explicit epsilon bound of the derived relation: |derived| < eps_constant * epsilon
    std::optional<Rational> eps_constant;
    // side constraints the contradiction depends on
    std::vector<std::string> constraints;
};

struct Solution {
    std::vector<std::string> params;
    std::map<std::string, LinExpr> values;
    std::vector<std::string> notes;
};

struct Verdict {
    bool feasible = false;
    std::optional<Certificate> certificate;
    std::optional<Solution> solution;
};

Verdict solve(const RelationSystem& system);

// Exact re-check of a certificate's combination against the system's relations.
bool certificate_consistent(const RelationSystem& system, const Certificate& c);
// Substitutes a feasible solution into every relation; true iff all hold exactly.
bool solution_consistent(const RelationSystem& system, const Solution& s);

LinExpr substitute(const LinExpr& e, const std::map<std::string, LinExpr>& values);

nlohmann::json to_json(const Verdict& v, const RelationSystem& system);

// ---- linear feasibility over the rationals (Fourier-Motzkin), used for side constraints ----
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational constant;
    bool strict = false;  // coeffs . x + constant > 0 (strict) or >= 0
    bool equality = false;
};
bool linear_feasible(size_t nvars, std::vector<LinearConstraint> cs);

}  // namespace ech::feas
