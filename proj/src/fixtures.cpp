#include "ech/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace ech {

namespace detail {
extern const char* const kFixtureJson;
}

using feas::Relation;
using feas::RelationSystem;
using feas::SSide;
using feas::Sym;

const nlohmann::json& fixture_registry() {
    static const nlohmann::json j = nlohmann::json::parse(detail::kFixtureJson);
    return j;
}

std::vector<std::string> fixture_names(const nlohmann::json& registry) {
    std::vector<std::string> out;
    for (const auto& f : registry.at("fixtures")) out.push_back(f.at("name").get<std::string>());
    return out;
}

std::string tuple_str(const CaseTuple& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s;
}

namespace {

const nlohmann::json& find_fixture(const nlohmann::json& reg, const std::string& name) {
    for (const auto& f : reg.at("fixtures"))
        if (f.at("name") == name) return f;
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

const nlohmann::json& family(const nlohmann::json& reg, const std::string& name) {
    const auto& fams = reg.at("families");
    if (!fams.contains(name)) throw std::invalid_argument("unknown relation family '" + name + "'");
    return fams.at(name);
}

Relation relation_from(const nlohmann::json& r) {
    feas::LinExpr e = feas::LinExpr::parse(r.at("expr").get<std::string>());
    return Relation{e.terms, e.constant, Rational::parse(r.value("eps", std::string("1"))), r.at("label").get<std::string>()};
}

void add_option(std::vector<Relation>& out, const nlohmann::json& reg, const std::string& fam, int option) {
    const auto& opts = family(reg, fam);
    if (option < 1 || option > static_cast<int>(opts.size()))
        throw std::out_of_range("family '" + fam + "' has no option " + std::to_string(option));
    for (const auto& r : opts.at(static_cast<size_t>(option - 1))) out.push_back(relation_from(r));
}

std::vector<Sym> symbols_from(const nlohmann::json& reg, const std::string& set) {
    std::vector<Sym> out;
    for (const auto& s : reg.at("symbol_sets").at(set)) {
        std::string name = s.at("name").get<std::string>();
        std::string kind = s.at("kind").get<std::string>();
        Sym y;
        if (kind == "action") y = Sym::action(name);
        else if (kind == "member")
            y = Sym::member(name, s.value("set", std::string("minus_theta")) == "theta" ? SSide::theta : SSide::minus_theta,
                            s.value("gt_one", false));
        else if (kind == "successor") y = Sym::successor(name, s.at("base").get<std::string>(), s.value("gap_gt_one", false));
        else if (kind == "multiplicity") y = Sym::multiplicity(name);
        else throw std::invalid_argument("unknown symbol kind '" + kind + "'");
        y.note = s.value("note", std::string());
        out.push_back(y);
    }
    return out;
}

std::vector<CaseTuple> all_tuples(const std::vector<size_t>& sizes) {
    std::vector<CaseTuple> out{{}};
    for (size_t n : sizes) {
        std::vector<CaseTuple> next;
        for (const auto& t : out)
            for (size_t i = 1; i <= n; ++i) {
                CaseTuple u = t;
                u.push_back(static_cast<int>(i));
                next.push_back(u);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

RelationSystem build_case(const std::string& name, const CaseTuple& tuple, const nlohmann::json& reg) {
    const auto& f = find_fixture(reg, name);
    const auto& fams = f.at("families");
    if (tuple.size() != fams.size()) throw std::invalid_argument("case tuple has the wrong length for fixture '" + name + "'");
    RelationSystem sys;
    sys.symbols = symbols_from(reg, f.at("symbols").get<std::string>());
    for (const auto& b : f.at("base")) {
        if (b.is_array()) add_option(sys.relations, reg, b.at(0).get<std::string>(), b.at(1).get<int>());
        else sys.relations.push_back(relation_from(b));
    }
    for (size_t i = 0; i < tuple.size(); ++i) add_option(sys.relations, reg, fams.at(i).get<std::string>(), tuple[i]);
    sys.validate();
    return sys;
}

FixtureReport run_fixture(const std::string& name, const nlohmann::json& reg) {
    const auto& f = find_fixture(reg, name);
    FixtureReport rep;
    rep.name = name;
    rep.citation = f.value("citation", std::string());
    std::vector<size_t> sizes;
    for (const auto& fam : f.at("families")) {
        rep.families.push_back(fam.get<std::string>());
        sizes.push_back(family(reg, rep.families.back()).size());
    }
    if (f.contains("refine")) rep.refine = f.at("refine").get<std::string>();
    for (const auto& t : f.at("expected_survivors")) rep.expected_survivors.push_back(t.get<CaseTuple>());
    const nlohmann::json expected_solutions = f.value("expected_solutions", nlohmann::json::object());

    for (const CaseTuple& t : all_tuples(sizes)) {
        CaseResult c;
        c.tuple = t;
        c.expected_feasible = std::find(rep.expected_survivors.begin(), rep.expected_survivors.end(), t) != rep.expected_survivors.end();
        c.system = build_case(name, t, reg);
        c.verdict = feas::solve(c.system);
        c.feasible = c.verdict.feasible;
        const feas::Solution* sol = c.verdict.solution ? &*c.verdict.solution : nullptr;
        if (c.feasible && rep.refine) {
            const size_t n = family(reg, *rep.refine).size();
            for (size_t k = 1; k <= n; ++k) {
                RelationSystem s = c.system;
                add_option(s.relations, reg, *rep.refine, static_cast<int>(k));
                feas::Verdict v = feas::solve(s);
                if (!v.feasible) continue;
                c.refine_feasible.push_back(k);
                if (!c.refined) c.refined = v;
            }
            c.feasible = !c.refine_feasible.empty();
            sol = c.refined && c.refined->solution ? &*c.refined->solution : nullptr;
        }
        std::string key = tuple_str(t);
        if (c.feasible && sol && expected_solutions.contains(key)) {
            for (const auto& [var, want] : expected_solutions.at(key).items()) {
                auto it = sol->values.find(var);
                feas::LinExpr w = feas::LinExpr::parse(want.get<std::string>());
                if (it == sol->values.end() || !(it->second == w))
                    c.solution_mismatch.push_back(var + ": expected " + w.str() + ", got " +
                                                  (it == sol->values.end() ? std::string("nothing") : it->second.str()));
            }
        }
        c.match = c.feasible == c.expected_feasible && c.solution_mismatch.empty();
        if (c.feasible) rep.survivors.push_back(t);
        rep.cases.push_back(std::move(c));
    }
    rep.match = std::all_of(rep.cases.begin(), rep.cases.end(), [](const CaseResult& c) { return c.match; });
    return rep;
}

nlohmann::json to_json(const FixtureReport& r, bool with_cases) {
    nlohmann::json j;
    j["name"] = r.name;
    j["citation"] = r.citation;
    j["families"] = r.families;
    if (r.refine) j["refine"] = *r.refine;
    j["expected_survivors"] = r.expected_survivors;
    j["survivors"] = r.survivors;
    j["excluded"] = r.cases.size() - r.survivors.size();
    j["match"] = r.match;
    if (with_cases) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : r.cases) {
            nlohmann::json e;
            e["case"] = c.tuple;
            e["expected"] = c.expected_feasible ? "feasible" : "infeasible";
            e["computed"] = c.feasible ? "feasible" : "infeasible";
            e["match"] = c.match;
            e["verdict"] = feas::to_json(c.verdict, c.system);
            if (r.refine) {
                e["refine_feasible"] = c.refine_feasible;
                if (c.refined) e["refined"] = feas::to_json(*c.refined, c.system);
            }
            if (!c.solution_mismatch.empty()) e["solution_mismatch"] = c.solution_mismatch;
            cs.push_back(e);
        }
        j["cases"] = cs;
    }
    return j;
}

}  // namespace ech
