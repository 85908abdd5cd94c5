#include "ech/ellipsoid.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

namespace ech {

Ellipsoid::Ellipsoid(ExactReal a_, ExactReal b_) : a(a_), b(b_) {
    if (a.sign() <= 0 || b.sign() <= 0) throw std::invalid_argument("ellipsoid parameters must be positive");
    irrational_ratio = (b / a).is_irrational();
}

namespace {

// m*a + n*b scaled to X + Y*sqrt(d) with integers, so comparisons stay in 128-bit integers.
struct Scaled {
    i128 A1 = 0, A2 = 0, B1 = 0, B2 = 0;
    i64 d = 0;

    explicit Scaled(const Ellipsoid& E) {
        SurdForm fa = E.a.surd_form(), fb = E.b.surd_form();
        if (fa.d != 0 && fb.d != 0 && fa.d != fb.d) throw std::domain_error("ellipsoid parameters lie in different quadratic fields");
        d = fa.d != 0 ? fa.d : fb.d;
        i128 L = fa.c / gcd128(fa.c, fb.c) * fb.c;
        A1 = fa.a * (L / fa.c);
        A2 = fa.b * (L / fa.c);
        B1 = fb.a * (L / fb.c);
        B2 = fb.b * (L / fb.c);
    }
};

struct Node {
    i128 X, Y;
    i64 m, n;
};

}  // namespace

std::vector<Generator> generators_by_action(const Ellipsoid& E, i64 count) {
    std::vector<Generator> out;
    if (count <= 0) return out;
    Scaled s(E);
    auto greater = [&](const Node& u, const Node& v) {
        int c = sign_int_surd(u.X - v.X, u.Y - v.Y, s.d);
        if (c != 0) return c > 0;
        return u.m != v.m ? u.m < v.m : u.n > v.n;  // deterministic order among ties
    };
    std::priority_queue<Node, std::vector<Node>, decltype(greater)> heap(greater);
    heap.push({0, 0, 0, 0});
    out.reserve(static_cast<size_t>(count));
    while (static_cast<i64>(out.size()) < count) {
        Node u = heap.top();
        heap.pop();
        out.push_back({u.m, u.n});
        heap.push({u.X + s.B1, u.Y + s.B2, u.m, u.n + 1});
        if (u.n == 0) heap.push({u.X + s.A1, u.Y + s.A2, u.m + 1, 0});
    }
    return out;
}

ExactReal capacity(const Ellipsoid& E, i64 k) {
    if (k < 0) throw std::invalid_argument("capacity index must be nonnegative");
    Generator g = generators_by_action(E, k + 1).back();
    return E.value(g.m, g.n);
}

i64 gen_index(const Ellipsoid& E, const Generator& g) {
    if (!E.irrational_ratio) throw std::invalid_argument("degenerate ellipsoid: rational ratio gives tied actions");
    ExactReal v = E.value(g.m, g.n);
    i64 count = 0;
    for (i64 i = 0;; ++i) {
        ExactReal rest = v - E.a * ExactReal(i);
        if (rest.sign() < 0) break;
        count += (rest / E.b).floor() + 1;
    }
    return 2 * (count - 1);
}

ExactReal volume_ratio(const Ellipsoid& E, i64 k) {
    if (k < 1) throw std::invalid_argument("volume ratio needs k >= 1");
    ExactReal c = capacity(E, k);
    return c * c / ExactReal(2 * k);
}

i64 lattice_count(const ExactReal& S1, const ExactReal& S2, const ExactReal& T) {
    if (S1.sign() <= 0 || S2.sign() <= 0) throw std::invalid_argument("lattice steps must be positive");
    i64 count = 0;
    for (i64 t1 = 0;; ++t1) {
        ExactReal rest = T - S1 * ExactReal(t1);
        if (rest.sign() <= 0) break;
        count += (rest / S2).ceil();  // #{t2 >= 0 : t2 * S2 < rest}
    }
    return count;
}

Catalog ellipsoid_catalog(const Ellipsoid& E) {
    if (!E.irrational_ratio) throw std::invalid_argument("degenerate ellipsoid: rational ratio");
    Catalog c;
    c.orbits.push_back(SimpleOrbit::elliptic("gamma1", E.a, E.a / E.b));
    c.orbits.push_back(SimpleOrbit::elliptic("gamma2", E.b, E.b / E.a));
    return c;
}

RelData ellipsoid_rel_data(const Generator& g) { return {g.m + g.n, 2 * g.m * g.n}; }

OrbitSet ellipsoid_orbit_set(const Catalog& c, const Generator& g) {
    OrbitSet s(c.group);
    if (g.m > 0) s.add(c.find("gamma1"), g.m);
    if (g.n > 0) s.add(c.find("gamma2"), g.n);
    return s;
}

DensityReport density_report(const Catalog& catalog, const ExactReal& M, const std::vector<i64>& gamma_class,
                             const std::vector<i64>& ns, const std::vector<i64>& ms,
                             const std::optional<std::string>& elliptic) {
    if (catalog.coverage && M > *catalog.coverage)
        throw std::invalid_argument("action bound exceeds the catalog's coverage " + catalog.coverage->str());
    DensityReport r;
    const SimpleOrbit* gamma = nullptr;
    if (elliptic) {
        gamma = &catalog.find(*elliptic);
        if (gamma->kind != OrbitKind::elliptic) throw std::invalid_argument("'" + *elliptic + "' is not elliptic");
    } else {
        for (const auto& o : catalog.orbits)
            if (o.kind == OrbitKind::elliptic) {
                gamma = &o;
                break;
            }
    }
    if (gamma) r.elliptic = gamma->name;
    std::vector<i64> target = catalog.group.reduce(gamma_class);

    // An empty catalog describes no contact form; nothing is enumerated.
    if (!catalog.orbits.empty()) {
        const size_t n = catalog.orbits.size();
        std::vector<std::vector<i64>> hom;
        for (const auto& o : catalog.orbits) hom.push_back(catalog.group.reduce(o.homology));
        std::vector<i64> mult(n, 0);
        std::vector<i64> cls = catalog.group.zero();
        std::function<void(size_t, const ExactReal&)> dfs = [&](size_t i, const ExactReal& used) {
            if (i == n) {
                if (catalog.group.reduce(cls) != target) return;
                i64 e = 0, h = 0;
                for (size_t j = 0; j < n; ++j) {
                    if (gamma && &catalog.orbits[j] == gamma) e = mult[j];
                    if (catalog.orbits[j].is_hyperbolic() && mult[j] > 0) ++h;
                }
                ++r.total;
                ++r.by_e[e];
                ++r.by_h[h];
                return;
            }
            const SimpleOrbit& o = catalog.orbits[i];
            i64 cap = o.is_hyperbolic() ? 1 : INT64_MAX;
            ExactReal acc = used;
            for (i64 m = 0; m <= cap; ++m) {
                if (m > 0) {
                    acc += o.action;
                    if (acc >= M) break;
                    for (size_t t = 0; t < cls.size(); ++t) cls[t] += hom[i][t];
                }
                mult[i] = m;
                dfs(i + 1, acc);
            }
            for (size_t t = 0; t < cls.size(); ++t) cls[t] -= mult[i] * hom[i][t];
            mult[i] = 0;
        };
        if (ExactReal(0) < M) dfs(0, ExactReal(0));
    }

    if (gamma && !r.by_e.empty()) {
        i64 emax = r.by_e.rbegin()->first;
        if (emax >= 1) {
            SSet s = s_theta(*gamma->rotation, emax);
            for (auto [e, c] : r.by_e)
                if (e >= 1 && s.contains(e)) r.in_s_theta += c;
        }
    }
    auto ratio = [&](i64 c) -> std::optional<double> {
        if (r.total == 0) return std::nullopt;
        return static_cast<double>(c) / static_cast<double>(r.total);
    };
    for (i64 v : ns) r.e_ratio[v] = ratio(r.by_e.count(v) ? r.by_e.at(v) : 0);
    for (i64 v : ms) r.h_ratio[v] = ratio(r.by_h.count(v) ? r.by_h.at(v) : 0);
    r.s_theta_ratio = gamma ? ratio(r.in_s_theta) : std::nullopt;
    return r;
}

}  // namespace ech
