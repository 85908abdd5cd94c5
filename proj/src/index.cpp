#include "ech/index.hpp"

#include <stdexcept>

namespace ech {

HomologyGroup::HomologyGroup(std::vector<i64> f) : factors(std::move(f)) {
    for (i64 x : factors) {
        if (x == 0) throw std::invalid_argument("homology group has a free part (b1 > 0 is not supported)");
        if (x < 0) throw std::invalid_argument("invariant factors must be positive");
    }
}

std::vector<i64> HomologyGroup::reduce(std::vector<i64> v) const {
    if (v.empty()) v = zero();
    if (v.size() != factors.size()) throw std::invalid_argument("homology vector has the wrong length");
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] %= factors[i];
        if (v[i] < 0) v[i] += factors[i];
    }
    return v;
}

SimpleOrbit SimpleOrbit::elliptic(std::string name, ExactReal action, ExactReal rotation, std::vector<i64> h) {
    SimpleOrbit o;
    o.name = std::move(name);
    o.kind = OrbitKind::elliptic;
    o.action = action;
    o.rotation = rotation;
    o.homology = std::move(h);
    o.validate();
    return o;
}

SimpleOrbit SimpleOrbit::hyperbolic(std::string name, OrbitKind kind, ExactReal action, i64 cz, std::vector<i64> h) {
    SimpleOrbit o;
    o.name = std::move(name);
    o.kind = kind;
    o.action = action;
    o.cz = cz;
    o.homology = std::move(h);
    o.validate();
    return o;
}

void SimpleOrbit::validate() const {
    if (action.sign() <= 0) throw std::invalid_argument("orbit '" + name + "': action must be positive");
    if (kind == OrbitKind::elliptic) {
        if (!rotation) throw std::invalid_argument("orbit '" + name + "': elliptic orbit needs a rotation number");
        require_irrational(*rotation);
    } else {
        if (rotation) throw std::invalid_argument("orbit '" + name + "': hyperbolic orbit has no rotation number");
        bool even = cz % 2 == 0;
        if (kind == OrbitKind::positive_hyperbolic && !even)
            throw std::invalid_argument("orbit '" + name + "': positive hyperbolic orbit needs even cz");
        if (kind == OrbitKind::negative_hyperbolic && even)
            throw std::invalid_argument("orbit '" + name + "': negative hyperbolic orbit needs odd cz");
    }
}

OrbitSet& OrbitSet::add(const SimpleOrbit& o, i64 m) {
    if (m < 1) throw std::invalid_argument("multiplicity must be positive");
    for (auto& [orb, mult] : items) {
        if (orb.name == o.name) {
            mult += m;
            return *this;
        }
    }
    items.emplace_back(o, m);
    return *this;
}

bool OrbitSet::admissible() const {
    for (const auto& [o, m] : items)
        if (o.is_hyperbolic() && m != 1) return false;
    return true;
}

std::vector<i64> OrbitSet::homology_class() const {
    std::vector<i64> h = group.zero();
    for (const auto& [o, m] : items) {
        std::vector<i64> v = group.reduce(o.homology);
        for (size_t i = 0; i < h.size(); ++i) h[i] += m * v[i];
    }
    return group.reduce(h);
}

i64 OrbitSet::multiplicity(const std::string& name) const {
    for (const auto& [o, m] : items)
        if (o.name == name) return m;
    return 0;
}

RelData compose(const RelData& r1, const RelData& r2, i64 q12) { return {r1.c1 + r2.c1, r1.q + 2 * q12 + r2.q}; }

const SimpleOrbit& Catalog::find(const std::string& name) const {
    for (const auto& o : orbits)
        if (o.name == name) return o;
    throw std::invalid_argument("unknown orbit '" + name + "'");
}

namespace {

ExactReal parse_real(const nlohmann::json& v) {
    if (v.is_number_integer()) return ExactReal(v.get<i64>());
    if (v.is_string()) return ExactReal::parse(v.get<std::string>());
    throw std::invalid_argument("expected an exact number (integer or string)");
}

}  // namespace

Catalog Catalog::from_json(const nlohmann::json& j) {
    Catalog c;
    c.group = HomologyGroup(j.value("group", std::vector<i64>{}));
    if (j.contains("coverage") && !(j["coverage"].is_string() && j["coverage"] == "complete"))
        c.coverage = parse_real(j["coverage"]);
    for (const auto& o : j.at("orbits")) {
        std::string name = o.at("name").get<std::string>();
        OrbitKind kind = orbit_kind_from_string(o.at("kind").get<std::string>());
        ExactReal act = parse_real(o.at("action"));
        std::vector<i64> h = c.group.reduce(o.value("homology", std::vector<i64>{}));
        for (const auto& prev : c.orbits)
            if (prev.name == name) throw std::invalid_argument("duplicate orbit '" + name + "'");
        if (kind == OrbitKind::elliptic)
            c.orbits.push_back(SimpleOrbit::elliptic(name, act, parse_real(o.at("rotation")), h));
        else
            c.orbits.push_back(SimpleOrbit::hyperbolic(name, kind, act, o.at("cz").get<i64>(), h));
    }
    return c;
}

nlohmann::json Catalog::to_json() const {
    nlohmann::json j;
    j["group"] = group.factors;
    j["coverage"] = coverage ? nlohmann::json(coverage->str()) : nlohmann::json("complete");
    j["orbits"] = nlohmann::json::array();
    for (const auto& o : orbits) {
        nlohmann::json e{{"name", o.name}, {"kind", to_string(o.kind)}, {"action", o.action.str()}, {"homology", o.homology}};
        if (o.rotation) e["rotation"] = o.rotation->str();
        else e["cz"] = o.cz;
        j["orbits"].push_back(e);
    }
    return j;
}

OrbitSet orbit_set_from_json(const nlohmann::json& j, const Catalog& catalog) {
    OrbitSet s(catalog.group);
    for (const auto& e : j.at("set")) s.add(catalog.find(e.at("orbit").get<std::string>()), e.value("multiplicity", i64{1}));
    return s;
}

OrbitSet orbit_set_from_json(const nlohmann::json& j) { return orbit_set_from_json(j, Catalog::from_json(j.at("catalog"))); }

ExactReal action(const OrbitSet& a) {
    ExactReal t;
    for (const auto& [o, m] : a.items) t += o.action * ExactReal(m);
    return t;
}

i64 e_count(const OrbitSet& a, const SimpleOrbit& gamma) {
    if (gamma.kind != OrbitKind::elliptic) throw std::invalid_argument("E counts an elliptic orbit");
    return a.multiplicity(gamma.name);
}

i64 h_count(const OrbitSet& a) {
    i64 n = 0;
    for (const auto& [o, m] : a.items)
        if (o.is_hyperbolic()) ++n;
    return n;
}

i64 cz_power(const SimpleOrbit& orbit, i64 k) {
    if (k < 1) throw std::invalid_argument("iterate must be positive");
    if (orbit.kind == OrbitKind::elliptic) return 2 * floor_mul(k, *orbit.rotation) + 1;
    return k * orbit.cz;
}

i64 cz_sum(const SimpleOrbit& orbit, i64 k) {
    i64 s = 0;
    for (i64 j = 1; j <= k; ++j) s += cz_power(orbit, j);
    return s;
}

namespace {

void require_same_class(const OrbitSet& a, const OrbitSet& b) {
    if (!a.items.empty() && !b.items.empty() && !(a.group == b.group))
        throw std::invalid_argument("orbit sets use different homology groups");
    const HomologyGroup& g = a.items.empty() ? b.group : a.group;
    std::vector<i64> ha = a.items.empty() ? g.zero() : a.homology_class();
    std::vector<i64> hb = b.items.empty() ? g.zero() : b.homology_class();
    if (ha != hb) throw std::invalid_argument("no relative class: the orbit sets are not homologous");
}

i64 cz_total(const OrbitSet& s, i64 drop) {
    i64 t = 0;
    for (const auto& [o, m] : s.items) t += cz_sum(o, m - drop);
    return t;
}

}  // namespace

i64 ech_index(const OrbitSet& a, const OrbitSet& b, const RelData& rel) {
    require_same_class(a, b);
    return rel.c1 + rel.q + cz_total(a, 0) - cz_total(b, 0);
}

i64 j0_index(const OrbitSet& a, const OrbitSet& b, const RelData& rel) {
    require_same_class(a, b);
    return -rel.c1 + rel.q + cz_total(a, 1) - cz_total(b, 1);
}

bool parity_check(const OrbitSet& a, const OrbitSet& b, i64 I) {
    if (!a.admissible() || !b.admissible()) throw std::invalid_argument("parity check needs admissible orbit sets");
    auto eps = [](const OrbitSet& s) {
        i64 n = 0;
        for (const auto& [o, m] : s.items)
            if (o.kind == OrbitKind::positive_hyperbolic) ++n;
        return n;
    };
    i64 d = I - (eps(a) - eps(b));
    return d % 2 == 0;
}

std::string to_string(Realizability r) {
    switch (r) {
        case Realizability::realizable: return "realizable";
        case Realizability::unrealizable: return "unrealizable";
        case Realizability::unclassified: return "unclassified";
    }
    return "?";
}

namespace {

struct TopoEntry {
    i64 j0, g, k, l;
    Realizability flag;
    const char* note;
};

// Curve types allowed for U-map curves at low J0, transcribed from the case analysis.
const TopoEntry kTopoTable[] = {
    {-1, 0, 1, 0, Realizability::realizable, "J0 = -1: listed type"},
    {0, 0, 1, 1, Realizability::realizable, "J0 = 0: listed type"},
    {0, 0, 2, 0, Realizability::realizable, "J0 = 0: listed type"},
    {1, 0, 3, 0, Realizability::realizable, "J0 = 1: listed type"},
    {1, 0, 2, 1, Realizability::realizable, "J0 = 1: listed type"},
    {1, 1, 1, 0, Realizability::realizable, "J0 = 1: listed type"},
    {1, 0, 1, 2, Realizability::unrealizable, "J0 = 1: solves the index equation but is ruled out geometrically"},
    {2, 0, 4, 0, Realizability::realizable, "J0 = 2: listed type"},
    {2, 0, 3, 1, Realizability::realizable, "J0 = 2: listed type"},
    {2, 0, 2, 2, Realizability::realizable, "J0 = 2: listed type"},
    {2, 1, 1, 1, Realizability::realizable, "J0 = 2: listed type"},
    {2, 1, 2, 0, Realizability::realizable, "J0 = 2: listed type"},
    {2, 0, 1, 3, Realizability::unrealizable, "J0 = 2: solves the index equation but is absent from the list of curve types"},
};

}  // namespace

std::vector<TopoType> topo_types(i64 j0) {
    if (j0 < -1) throw std::invalid_argument("J0 of a U-map curve is at least -1");
    std::vector<TopoType> out;
    i64 total = j0 + 2;  // 2g + k + l
    for (i64 g = 0; 2 * g <= total - 1; ++g) {
        for (i64 k = total - 2 * g; k >= 1; --k) {
            TopoType t{g, k, total - 2 * g - k, Realizability::unclassified, "no realizability data for this J0"};
            for (const auto& e : kTopoTable) {
                if (e.j0 == j0 && e.g == t.g && e.k == t.k && e.l == t.l) {
                    t.flag = e.flag;
                    t.note = e.note;
                }
            }
            out.push_back(t);
        }
    }
    return out;
}

i64 floor_step(const ExactReal& theta, i64 p, i64 p_next, i64 N) {
    if (p < 1 || p_next <= p) throw std::invalid_argument("floor_step needs p < p_next");
    if (N < p || N > p_next) throw std::out_of_range("floor_step needs p <= N <= p_next");
    SSet s = s_theta(-theta, p_next);
    if (!s.contains(p) || !s.contains(p_next) || s.successor(p) != p_next)
        throw std::invalid_argument("p and p_next are not consecutive members of S_{-theta}");
    i64 rest = N == p ? 0 : floor_mul(N - p, theta);
    return floor_mul(N, theta) - rest - floor_mul(p, theta);
}

}  // namespace ech
