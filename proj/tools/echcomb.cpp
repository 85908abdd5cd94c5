#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ech/ellipsoid.hpp"
#include "ech/exactreal.hpp"
#include "ech/fixtures.hpp"
#include "ech/index.hpp"
#include "ech/partitions.hpp"
#include "ech/suite.hpp"
#include "ech/transitions.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Input problems detected after parsing (bad theta, unreadable file, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    bool json_mode = false;
    std::string command;

    void emit(const json& result, const std::string& table) const {
        if (json_mode) {
            json env{{"schema_version", kSchemaVersion}, {"command", command}, {"result", result}};
            std::cout << env.dump(2) << "\n";
        } else {
            std::cout << table;
        }
    }
};

ech::ExactReal parse_real(const std::string& s) {
    try {
        return ech::ExactReal::parse(s);
    } catch (const std::exception& e) {
        throw UsageError("cannot parse '" + s + "': " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string join(const std::vector<ech::i64>& v, const std::string& sep = ", ") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string pad(std::string s, size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

// ---------------------------------------------------------------- subcommands

int cmd_stheta(const Output& out, const std::string& theta_s, ech::i64 qmax) {
    ech::ExactReal theta = parse_real(theta_s);
    ech::SSet s = ech::s_theta(theta, qmax);
    out.emit({{"theta", theta.str()}, {"max", qmax}, {"members", s.members}, {"largest_gap", s.largest_gap()}},
             "S_theta for theta = " + theta.str() + " up to " + std::to_string(qmax) + ": {" + join(s.members) + "}\n");
    return 0;
}

int cmd_partition(const Output& out, const std::string& theta_s, ech::i64 m, const std::string& dir) {
    ech::ExactReal theta = parse_real(theta_s);
    ech::Partition p = dir == "in" ? ech::partition_in(theta, m) : ech::partition_out(theta, m);
    out.emit({{"theta", theta.str()}, {"m", m}, {"dir", dir}, {"entries", p.entries}, {"total", p.total()}},
             "P_theta^" + dir + "(" + std::to_string(m) + ") = (" + join(p.entries) + ")\n");
    return 0;
}

int cmd_cz(const Output& out, const std::string& kind_s, const std::string& theta_s, ech::i64 cz, ech::i64 k) {
    ech::OrbitKind kind = ech::orbit_kind_from_string(kind_s);
    ech::SimpleOrbit o = kind == ech::OrbitKind::elliptic
                             ? ech::SimpleOrbit::elliptic("gamma", ech::ExactReal(1), parse_real(theta_s))
                             : ech::SimpleOrbit::hyperbolic("h", kind, ech::ExactReal(1), cz);
    o.validate();
    json rows = json::array();
    std::string table = pad("k", 6) + pad("cz(k)", 10) + "sum_{j<=k}\n";
    for (ech::i64 j = 1; j <= k; ++j) {
        ech::i64 v = ech::cz_power(o, j), s = ech::cz_sum(o, j);
        rows.push_back({{"k", j}, {"cz", v}, {"sum", s}});
        table += pad(std::to_string(j), 6) + pad(std::to_string(v), 10) + std::to_string(s) + "\n";
    }
    json res{{"kind", ech::to_string(kind)}, {"iterates", rows}};
    if (o.rotation) res["theta"] = o.rotation->str();
    else res["cz"] = cz;
    out.emit(res, table);
    return 0;
}

int cmd_index(const Output& out, const std::string& alpha_f, const std::string& beta_f, ech::i64 c1, ech::i64 q) {
    json ja = read_json_file(alpha_f), jb = read_json_file(beta_f);
    ech::OrbitSet a = ech::orbit_set_from_json(ja), b = ech::orbit_set_from_json(jb);
    ech::RelData rel{c1, q};
    ech::i64 I = ech::ech_index(a, b, rel);
    ech::i64 J = ech::j0_index(a, b, rel);
    json res{{"I", I}, {"J0", J}, {"c1", c1}, {"q", q}, {"action_alpha", ech::action(a).str()},
             {"action_beta", ech::action(b).str()}};
    std::string table = "I = " + std::to_string(I) + "\nJ0 = " + std::to_string(J) + "\n";
    if (a.admissible() && b.admissible()) {
        bool p = ech::parity_check(a, b, I);
        res["parity_ok"] = p;
        table += std::string("parity ") + (p ? "consistent" : "violated") + "\n";
    }
    out.emit(res, table);
    return 0;
}

int cmd_j0_types(const Output& out, ech::i64 j0) {
    json rows = json::array();
    std::string table = pad("(g,k,l)", 12) + pad("flag", 16) + "note\n";
    for (const auto& t : ech::topo_types(j0)) {
        rows.push_back({{"g", t.g}, {"k", t.k}, {"l", t.l}, {"flag", ech::to_string(t.flag)}, {"note", t.note}});
        table += pad("(" + join({t.g, t.k, t.l}, ",") + ")", 12) + pad(ech::to_string(t.flag), 16) + t.note + "\n";
    }
    out.emit({{"j0", j0}, {"types", rows}}, table);
    return 0;
}

int cmd_caps(const Output& out, const std::string& a_s, const std::string& b_s, ech::i64 k) {
    ech::Ellipsoid E(parse_real(a_s), parse_real(b_s));
    json rows = json::array();
    std::string table = pad("k", 8) + "c_k\n";
    std::vector<ech::Generator> gens = ech::generators_by_action(E, k + 1);
    for (ech::i64 j = 0; j <= k; ++j) {
        const auto& g = gens[static_cast<size_t>(j)];
        std::string v = E.value(g.m, g.n).str();
        rows.push_back({{"k", j}, {"capacity", v}, {"m", g.m}, {"n", g.n}});
        table += pad(std::to_string(j), 8) + v + "\n";
    }
    out.emit({{"a", E.a.str()}, {"b", E.b.str()}, {"capacities", rows}}, table);
    return 0;
}

int cmd_volume(const Output& out, const std::string& a_s, const std::string& b_s, ech::i64 k) {
    ech::Ellipsoid E(parse_real(a_s), parse_real(b_s));
    ech::ExactReal c = ech::capacity(E, k);
    ech::ExactReal r = ech::volume_ratio(E, k);
    ech::ExactReal ab = E.a * E.b;
    double rel = static_cast<double>((r.approx() - ab.approx()) / ab.approx());
    std::ostringstream os;
    os << "c_" << k << " = " << c.str() << "\nc_k^2/(2k) = " << r.str() << " ~ " << static_cast<double>(r.approx())
       << "\nab = " << ab.str() << ", relative deviation " << rel << "\n";
    out.emit({{"a", E.a.str()}, {"b", E.b.str()}, {"k", k}, {"capacity", c.str()}, {"ratio", r.str()},
              {"ratio_approx", static_cast<double>(r.approx())}, {"ab", ab.str()}, {"relative_deviation", rel}},
             os.str());
    return 0;
}

int cmd_density(const Output& out, const std::string& catalog_f, const std::string& max_action,
                const std::vector<ech::i64>& cls, const std::vector<ech::i64>& ns, const std::vector<ech::i64>& ms,
                const std::string& elliptic) {
    json jc = read_json_file(catalog_f);
    ech::Catalog cat = ech::Catalog::from_json(jc.contains("catalog") ? jc.at("catalog") : jc);
    auto d = ech::density_report(cat, parse_real(max_action), cls, ns, ms,
                                 elliptic.empty() ? std::nullopt : std::optional<std::string>(elliptic));
    auto ratios = [](const std::map<ech::i64, std::optional<double>>& m) {
        json j = json::object();
        for (const auto& [k, v] : m) j[std::to_string(k)] = v ? json(*v) : json(nullptr);
        return j;
    };
    auto counts = [](const std::map<ech::i64, ech::i64>& m) {
        json j = json::object();
        for (const auto& [k, v] : m) j[std::to_string(k)] = v;
        return j;
    };
    json res{{"total", d.total},        {"elliptic", d.elliptic},         {"by_e", counts(d.by_e)},
             {"by_h", counts(d.by_h)},  {"in_s_theta", d.in_s_theta},     {"e_ratio", ratios(d.e_ratio)},
             {"h_ratio", ratios(d.h_ratio)},
             {"s_theta_ratio", d.s_theta_ratio ? json(*d.s_theta_ratio) : json(nullptr)}};
    std::ostringstream os;
    os << "|Lambda| = " << d.total << "\n";
    auto show = [&](const char* label, const std::map<ech::i64, std::optional<double>>& m) {
        for (const auto& [k, v] : m) {
            os << label << k << ": ";
            if (v) os << *v;
            else os << "absent";
            os << "\n";
        }
    };
    show("E > ", d.e_ratio);
    show("H < ", d.h_ratio);
    os << "E in S_theta: ";
    if (d.s_theta_ratio) os << *d.s_theta_ratio;
    else os << "absent";
    os << "\n";
    out.emit(res, os.str());
    return 0;
}

int cmd_verify_cases(const Output& out, const std::vector<std::string>& names) {
    std::vector<std::string> run = names.empty() ? ech::fixture_names() : names;
    json reports = json::array();
    std::string table;
    bool ok = true;
    for (const auto& n : run) {
        ech::FixtureReport r = ech::run_fixture(n);
        ok = ok && r.match;
        reports.push_back(ech::to_json(r, true));
        std::string surv;
        for (const auto& t : r.survivors) surv += (surv.empty() ? "" : ", ") + std::string("(") + ech::tuple_str(t) + ")";
        table += pad(r.name, 10) + (r.match ? "ok       " : "MISMATCH ") + "survivors {" + surv + "}  [" + r.citation + "]\n";
        for (const auto& c : r.cases)
            if (!c.match)
                table += "    case (" + ech::tuple_str(c.tuple) + "): expected " +
                         (c.expected_feasible ? "feasible" : "infeasible") + ", computed " +
                         (c.feasible ? "feasible" : "infeasible") + "\n";
    }
    out.emit({{"fixtures", reports}, {"match", ok}}, table);
    return ok ? 0 : kExitMismatch;
}

int cmd_verify_all(const Output& out, unsigned jobs) {
    std::vector<ech::suite::CheckResult> rs = ech::suite::run_all(ech::suite::SuiteConfig{}, jobs);
    json arr = json::array();
    std::string table;
    bool ok = true;
    for (const auto& r : rs) {
        ok = ok && r.passed;
        arr.push_back(ech::suite::to_json(r));
        table += std::string(r.passed ? "PASS " : "FAIL ") + pad(r.name, 16) + r.detail + "\n";
    }
    out.emit({{"checks", arr}, {"match", ok}}, table);
    return ok ? 0 : kExitMismatch;
}

int cmd_pairs(const Output& out, ech::trans::Granularity g) {
    using namespace ech::trans;
    json arr = json::array();
    std::string table = pad("pair", 10) + pad("computed", 12) + pad("expected", 12) + "reason\n";
    bool ok = true;
    size_t allowed = 0;
    for (const auto& r : all_pairs(g)) {
        arr.push_back(to_json(r));
        bool match = r.verdict.feasible == r.expected_feasible;
        ok = ok && match;
        allowed += r.verdict.feasible;
        std::string why = r.verdict.feasible ? "feasible branch: " + r.branch
                                             : ech::feas::to_string(r.verdict.certificate->kind) + ": " +
                                                   r.verdict.certificate->statement;
        table += pad("(" + to_string(r.t1) + "," + to_string(r.t2) + ")", 10) +
                 pad(r.verdict.feasible ? "feasible" : "excluded", 12) +
                 pad(r.expected_feasible ? "feasible" : "excluded", 12) + (match ? "" : "[DEVIATION] ") + why +
                 "  [" + r.citation + "]\n";
    }
    table += std::to_string(allowed) + " allowed, " + std::to_string(36 - allowed) + " excluded\n";
    out.emit({{"granularity", to_string(g)}, {"pairs", arr}, {"allowed", allowed}, {"match", ok}}, table);
    return ok ? 0 : kExitMismatch;
}

int cmd_chains(const Output& out, ech::trans::Granularity g) {
    using namespace ech::trans;
    json arr = json::array();
    std::string table;
    size_t feasible = 0;
    for (const auto& r : chain_check(g)) {
        arr.push_back(to_json(r));
        feasible += r.verdict.feasible;
        std::string name = "(" + to_string(r.types[0]) + "," + to_string(r.types[1]) + "," + to_string(r.types[2]) + ")";
        std::string why = r.verdict.feasible ? "FEASIBLE (model-granularity finding): " + r.branch
                                             : ech::feas::to_string(r.verdict.certificate->kind) + ": " +
                                                   r.verdict.certificate->statement;
        table += pad(name, 14) + why + "\n";
        if (r.verdict.feasible && r.verdict.solution)
            for (const auto& [k, v] : r.verdict.solution->values) table += "    " + k + " = " + v.str() + "\n";
    }
    table += std::to_string(arr.size()) + " triples, " + std::to_string(feasible) + " feasible\n";
    out.emit({{"granularity", to_string(g)}, {"triples", arr}, {"feasible", feasible}}, table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of ECH case analyses: S-sets, partitions, indices, case tables, transitions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "echcomb 1.0");

    std::string output_default = "table";
    if (const char* env = std::getenv("ECHCOMB_OUTPUT")) {
        std::string v = env;
        if (v != "json" && v != "table") {
            std::cerr << "ECHCOMB_OUTPUT must be 'json' or 'table'\n";
            return kExitUsage;
        }
        output_default = v;
    }
    Output out;
    bool json_flag = false;
    std::string output_mode = output_default;
    auto add_output = [&](CLI::App* sc) {
        sc->add_flag("--json", json_flag, "JSON output");
        sc->add_option("--output", output_mode, "output mode")->check(CLI::IsMember({"table", "json"}));
    };

    std::string theta;
    ech::i64 qmax = 0, m = 0, k = 0, c1 = 0, q = 0, j0 = 0, cz = 0;
    std::string dir = "in", kind = "elliptic", alpha_f, beta_f, a_s, b_s, catalog_f, max_action, elliptic;
    std::vector<ech::i64> cls, ns, ms;
    std::vector<std::string> fixtures;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string granularity;

    auto* st = app.add_subcommand("stheta", "members of S_theta up to a bound");
    st->add_option("--theta", theta, "rotation number, p/q or (a+b*sqrt(d))/c")->required();
    st->add_option("--max", qmax, "bound")->required()->check(CLI::PositiveNumber);
    add_output(st);

    auto* pa = app.add_subcommand("partition", "incoming or outgoing partition of a multiplicity");
    pa->add_option("--theta", theta, "rotation number")->required();
    pa->add_option("--m", m, "multiplicity")->required()->check(CLI::NonNegativeNumber);
    pa->add_option("--dir", dir, "in or out")->check(CLI::IsMember({"in", "out"}));
    add_output(pa);

    auto* czc = app.add_subcommand("cz", "Conley-Zehnder indices of iterates");
    czc->add_option("--kind", kind, "elliptic, positive_hyperbolic or negative_hyperbolic");
    czc->add_option("--theta", theta, "rotation number (elliptic)");
    czc->add_option("--cz", cz, "index of the simple orbit (hyperbolic)");
    czc->add_option("--k", k, "largest iterate")->required()->check(CLI::PositiveNumber);
    add_output(czc);

    auto* ix = app.add_subcommand("index", "ECH index and J0 of a pair of orbit sets");
    ix->add_option("--alpha", alpha_f, "JSON file {catalog, set}")->required();
    ix->add_option("--beta", beta_f, "JSON file {catalog, set}")->required();
    ix->add_option("--c1", c1, "relative first Chern number")->required();
    ix->add_option("--q", q, "relative self-intersection")->required();
    add_output(ix);

    auto* jt = app.add_subcommand("j0-types", "topological types (g, k, l) with a given J0");
    jt->add_option("--j0", j0, "J0 value")->required();
    add_output(jt);

    auto* el = app.add_subcommand("ellipsoid", "ellipsoid model E(a, b)");
    el->require_subcommand(1);
    auto* caps = el->add_subcommand("caps", "capacities c_0 .. c_k");
    auto* vol = el->add_subcommand("volume", "c_k^2 / (2k) against ab");
    for (auto* sc : {caps, vol}) {
        sc->add_option("--a", a_s, "first axis")->required();
        sc->add_option("--b", b_s, "second axis")->required();
        sc->add_option("--k", k, "index")->required()->check(CLI::NonNegativeNumber);
        add_output(sc);
    }
    auto* den = el->add_subcommand("density", "admissible orbit sets below an action bound");
    den->add_option("--catalog", catalog_f, "catalog JSON file")->required();
    den->add_option("--max-action", max_action, "action bound")->required();
    den->add_option("--class", cls, "homology class (default zero)");
    den->add_option("--n", ns, "values n: report the share with E(alpha) = n");
    den->add_option("--m", ms, "values m: report the share with H(alpha) = m");
    den->add_option("--elliptic", elliptic, "elliptic orbit whose multiplicity is E");
    add_output(den);

    auto* ver = app.add_subcommand("verify", "fixture tables and invariant suites");
    ver->require_subcommand(1);
    auto* vc = ver->add_subcommand("cases", "case-analysis fixtures");
    vc->add_option("--fixture", fixtures, "fixture name (repeatable; default all)");
    add_output(vc);
    auto* va = ver->add_subcommand("all", "every fixture and invariant suite");
    va->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_output(va);

    auto* tr = app.add_subcommand("transitions", "compatibility of consecutive transition types");
    tr->require_subcommand(1);
    auto* tp = tr->add_subcommand("pairs", "all 36 ordered pairs");
    auto* tc = tr->add_subcommand("chains", "triples of consecutive allowed pairs");
    for (auto* sc : {tp, tc}) {
        sc->add_option("--granularity", granularity, "argument or full")->check(CLI::IsMember({"argument", "full"}));
        add_output(sc);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    out.json_mode = json_flag || output_mode == "json";
    auto gran = [&](ech::trans::Granularity dflt) {
        return granularity.empty() ? dflt : ech::trans::granularity_from_string(granularity);
    };
    const std::vector<std::pair<CLI::App*, std::string>> names{
        {st, "stheta"},        {pa, "partition"},           {czc, "cz"},
        {ix, "index"},         {jt, "j0-types"},            {caps, "ellipsoid caps"},
        {vol, "ellipsoid volume"}, {den, "ellipsoid density"}, {vc, "verify cases"},
        {va, "verify all"},    {tp, "transitions pairs"},   {tc, "transitions chains"},
    };
    for (const auto& [sc, name] : names)
        if (sc->parsed()) out.command = name;
    try {
        if (st->parsed()) return cmd_stheta(out, theta, qmax);
        if (pa->parsed()) return cmd_partition(out, theta, m, dir);
        if (czc->parsed()) {
            if (kind == "elliptic" && theta.empty()) throw UsageError("--theta is required for elliptic orbits");
            return cmd_cz(out, kind, theta, cz, k);
        }
        if (ix->parsed()) return cmd_index(out, alpha_f, beta_f, c1, q);
        if (jt->parsed()) return cmd_j0_types(out, j0);
        if (caps->parsed()) return cmd_caps(out, a_s, b_s, k);
        if (vol->parsed()) {
            if (k < 1) throw UsageError("--k must be at least 1");
            return cmd_volume(out, a_s, b_s, k);
        }
        if (den->parsed()) return cmd_density(out, catalog_f, max_action, cls, ns, ms, elliptic);
        if (vc->parsed()) return cmd_verify_cases(out, fixtures);
        if (va->parsed()) return cmd_verify_all(out, jobs);
        if (tp->parsed()) return cmd_pairs(out, gran(ech::trans::Granularity::argument));
        if (tc->parsed()) return cmd_chains(out, gran(ech::trans::Granularity::full));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
