#include "ech/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "ech/ellipsoid.hpp"
#include "ech/fixtures.hpp"
#include "ech/index.hpp"
#include "ech/partitions.hpp"
#include "ech/transitions.hpp"

namespace ech::suite {

namespace {

bool squarefree(i64 d) {
    for (i64 p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

template <class F>
CheckResult timed(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

std::vector<ExactReal> random_surds(size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ExactReal> out;
    std::set<std::string> seen;
    while (out.size() < count) {
        i64 d = std::uniform_int_distribution<i64>(2, 60)(rng);
        if (!squarefree(d)) continue;
        i64 b = std::uniform_int_distribution<i64>(1, 3)(rng);
        if (rng() & 1) b = -b;
        i64 c = std::uniform_int_distribution<i64>(1, 12)(rng);
        // a + b*sqrt(d) in (0, c)
        ExactReal s = ExactReal::surd(0, b, d, 1);
        i64 lo = (-s).floor() + 1, hi = (ExactReal(c) - s).floor();
        if (hi < lo) continue;
        i64 a = std::uniform_int_distribution<i64>(lo, hi)(rng);
        ExactReal t = ExactReal::surd(a, b, d, c);
        if (!(t > ExactReal(0) && t < ExactReal(1))) continue;
        if (seen.insert(t.str()).second) out.push_back(t);
    }
    return out;
}

std::vector<i64> s_theta_brute(const ExactReal& theta, i64 qmax) {
    std::vector<i64> out;
    for (i64 q = 1; q <= qmax; ++q) {
        bool ok = true;
        for (i64 q2 = 1; q2 < q && ok; ++q2) ok = cmp_ceil_fractions(q, q2, theta) == std::strong_ordering::less;
        if (ok) out.push_back(q);
    }
    return out;
}

CheckResult sset_laws(size_t surds, i64 qmax, std::uint64_t seed) {
    return timed("sset_laws", [&] {
        CheckResult r;
        size_t oracle = 0, gaps = 0, inter = 0, succ = 0;
        for (const auto& t : random_surds(surds, seed)) {
            SSet s = s_theta(t, qmax);
            SSet m = s_theta(-t, qmax);
            if (s.members != s_theta_brute(t, qmax)) ++oracle;
            for (size_t i = 0; i + 1 < s.members.size(); ++i) {
                i64 g = s.members[i + 1] - s.members[i];
                if (i + 2 < s.members.size() && s.members[i + 2] - s.members[i + 1] < g) ++gaps;
                if (!m.contains(g)) ++gaps;
                if (s.members[i] > 1 && g == s.members[i]) ++succ;
            }
            std::vector<i64> both;
            std::set_intersection(s.members.begin(), s.members.end(), m.members.begin(), m.members.end(),
                                  std::back_inserter(both));
            if (both != std::vector<i64>{1}) ++inter;
        }
        r.passed = oracle == 0 && gaps == 0 && inter == 0 && succ == 0;
        r.data = {{"surds", surds}, {"qmax", qmax}, {"oracle_mismatches", oracle}, {"gap_law_violations", gaps},
                  {"intersection_violations", inter}, {"successor_gap_violations", succ}};
        r.detail = std::to_string(surds) + " surds, qmax " + std::to_string(qmax) + ": oracle mismatches " +
                   std::to_string(oracle) + ", gap violations " + std::to_string(gaps) + ", intersection violations " +
                   std::to_string(inter) + ", successor-gap violations " + std::to_string(succ);
        return r;
    });
}

CheckResult partition_laws(size_t surds, i64 max_m, std::uint64_t seed) {
    return timed("partition_laws", [&] {
        CheckResult r;
        size_t bad_total = 0, bad_member = 0, bad_order = 0, bad_hyp = 0;
        for (const auto& t : random_surds(surds, seed)) {
            SSet s = s_theta(t, max_m);
            for (i64 M = 0; M <= max_m; ++M) {
                Partition p = partition_in(t, M);
                if (p.total() != M) ++bad_total;
                if (!std::is_sorted(p.entries.rbegin(), p.entries.rend())) ++bad_order;
                for (i64 e : p.entries)
                    if (!s.contains(e)) ++bad_member;
            }
        }
        for (i64 M = 1; M <= max_m; ++M) {
            for (Direction dir : {Direction::in, Direction::out}) {
                std::vector<i64> pos(static_cast<size_t>(M), 1);
                std::vector<i64> neg(static_cast<size_t>(M / 2), 2);
                if (M % 2) neg.push_back(1);
                if (partition_orbit(OrbitKind::positive_hyperbolic, dir, M).entries != pos) ++bad_hyp;
                if (partition_orbit(OrbitKind::negative_hyperbolic, dir, M).entries != neg) ++bad_hyp;
            }
        }
        r.passed = bad_total + bad_member + bad_order + bad_hyp == 0;
        r.data = {{"surds", surds}, {"max_m", max_m}, {"total_mismatches", bad_total}, {"non_member_entries", bad_member},
                  {"unsorted", bad_order}, {"hyperbolic_mismatches", bad_hyp}};
        r.detail = std::to_string(surds) + " surds, M <= " + std::to_string(max_m) + ": total mismatches " +
                   std::to_string(bad_total) + ", entries outside S_theta " + std::to_string(bad_member) +
                   ", hyperbolic pattern mismatches " + std::to_string(bad_hyp);
        return r;
    });
}

CheckResult floor_step_law(size_t surds, i64 qmax, std::uint64_t seed) {
    return timed("floor_step_law", [&] {
        CheckResult r;
        size_t checked = 0, bad = 0, steps = 0;
        for (const auto& t : random_surds(surds, seed)) {
            SSet m = s_theta(-t, qmax);
            for (size_t i = 0; i + 1 < m.members.size(); ++i) {
                i64 p = m.members[i], pn = m.members[i + 1];
                ++steps;
                for (i64 N = p; N <= pn; ++N) {
                    ++checked;
                    if (floor_step(t, p, pn, N) != (N == pn ? 1 : 0)) ++bad;
                }
            }
        }
        r.passed = bad == 0;
        r.data = {{"surds", surds}, {"qmax", qmax}, {"steps", steps}, {"values_checked", checked}, {"exceptions", bad}};
        r.detail = std::to_string(steps) + " consecutive pairs, " + std::to_string(checked) + " values of N, exceptions " +
                   std::to_string(bad);
        return r;
    });
}

CheckResult topo_tables() {
    return timed("topo_tables", [] {
        using T = std::tuple<i64, i64, i64, bool>;
        // (g, k, l, realizable) per J0, listed types only plus the excluded (0,1,2)
        const std::vector<std::pair<i64, std::vector<T>>> expected{
            {-1, {{0, 1, 0, true}}},
            {0, {{0, 2, 0, true}, {0, 1, 1, true}}},
            {1, {{0, 3, 0, true}, {0, 2, 1, true}, {0, 1, 2, false}, {1, 1, 0, true}}},
            {2, {{0, 4, 0, true}, {0, 3, 1, true}, {0, 2, 2, true}, {0, 1, 3, false}, {1, 2, 0, true}, {1, 1, 1, true}}},
        };
        CheckResult r;
        r.passed = true;
        r.data = nlohmann::json::object();
        for (const auto& [j0, want] : expected) {
            std::set<T> got, exp(want.begin(), want.end());
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& t : topo_types(j0)) {
                got.insert({t.g, t.k, t.l, t.flag == Realizability::realizable});
                rows.push_back({t.g, t.k, t.l, to_string(t.flag)});
            }
            r.data[std::to_string(j0)] = rows;
            if (got != exp) {
                r.passed = false;
                r.detail += "J0 = " + std::to_string(j0) + " differs; ";
            }
        }
        if (r.passed) r.detail = "J0 = -1, 0, 1, 2 match, (0,1,2) excluded at J0 = 1";
        return r;
    });
}

CheckResult fixture_suite() {
    return timed("fixtures", [] {
        CheckResult r;
        r.passed = true;
        r.data = nlohmann::json::array();
        std::vector<std::string> bad;
        for (const auto& name : fixture_names()) {
            FixtureReport rep = run_fixture(name);
            r.data.push_back(to_json(rep, false));
            if (!rep.match) {
                r.passed = false;
                bad.push_back(name);
            }
        }
        r.detail = std::to_string(r.data.size()) + " fixtures, mismatching: " +
                   (bad.empty() ? std::string("none") : nlohmann::json(bad).dump());
        return r;
    });
}

CheckResult transition_tables() {
    using namespace trans;
    return timed("transitions", [] {
        CheckResult r;
        std::vector<PairResult> pairs = all_pairs(Granularity::argument);
        size_t excluded = 0, mism = 0, asym = 0;
        std::map<std::pair<TType, TType>, bool> v;
        for (const auto& p : pairs) {
            v[{p.t1, p.t2}] = p.verdict.feasible;
            if (!p.verdict.feasible) ++excluded;
            if (p.verdict.feasible != p.expected_feasible) ++mism;
        }
        for (const auto& [k, f] : v)
            if (v.at({mirror(k.second), mirror(k.first)}) != f) ++asym;
        std::vector<ChainResult> chains = chain_check(Granularity::full);
        nlohmann::json feasible_chains = nlohmann::json::array();
        for (const auto& c : chains)
            if (c.verdict.feasible) feasible_chains.push_back(to_json(c));
        r.passed = excluded == 24 && mism == 0 && asym == 0 && feasible_chains.empty();
        r.data = {{"excluded_pairs", excluded}, {"allowed_pairs", pairs.size() - excluded}, {"pair_mismatches", mism},
                  {"mirror_violations", asym}, {"triples", chains.size()}, {"feasible_triples", feasible_chains}};
        r.detail = std::to_string(excluded) + " excluded / " + std::to_string(pairs.size() - excluded) +
                   " allowed pairs, " + std::to_string(mism) + " deviations, " + std::to_string(asym) +
                   " mirror violations; " + std::to_string(chains.size()) + " triples, " +
                   std::to_string(feasible_chains.size()) + " feasible";
        return r;
    });
}

CheckResult volume_law(i64 k_small, i64 k_large, double tol) {
    return timed("volume_law", [&] {
        CheckResult r;
        Ellipsoid E(ExactReal(1), ExactReal::sqrt_of(Rational(2)));
        const double target = std::sqrt(2.0L);
        double e1 = std::fabs(static_cast<double>(volume_ratio(E, k_small).approx()) - target) / target;
        double e2 = std::fabs(static_cast<double>(volume_ratio(E, k_large).approx()) - target) / target;
        r.passed = e1 < tol && e2 < e1;
        r.data = {{"k_small", k_small}, {"k_large", k_large}, {"rel_error_small", e1}, {"rel_error_large", e2}, {"tol", tol}};
        r.detail = "E(1, sqrt 2): relative error " + fmt(e1) + " at k = " + std::to_string(k_small) + ", " + fmt(e2) +
                   " at k = " + std::to_string(k_large) + " (tol " + fmt(tol) + ")";
        return r;
    });
}

CheckResult counting_laws(double t_min, double t_max, double spread_tol, i64 min_sets, double density_tol) {
    return timed("counting_laws", [&] {
        CheckResult r;
        const ExactReal s1(1), s2 = ExactReal::sqrt_of(Rational(2));
        const double a = 1.0, b = std::sqrt(2.0);
        // deviation / T on a geometric sweep; C fitted as the maximum ratio
        std::vector<double> ratios;
        nlohmann::json sweep = nlohmann::json::array();
        for (double T = t_min; T <= t_max * 1.0000001; T *= std::pow(10.0, 0.25)) {
            i64 Ti = static_cast<i64>(std::llround(T));
            double dev = std::fabs(static_cast<double>(lattice_count(s1, s2, ExactReal(Ti))) - double(Ti) * Ti / (2 * a * b));
            ratios.push_back(dev / Ti);
            sweep.push_back({{"T", Ti}, {"deviation", dev}, {"ratio", dev / Ti}});
        }
        double C = *std::max_element(ratios.begin(), ratios.end());
        double lo = *std::min_element(ratios.begin(), ratios.end());
        double spread = (C - lo) / C;
        bool lattice_ok = spread < spread_tol;

        // two-elliptic catalog: grow M until |Lambda(M, 0)| reaches min_sets
        Ellipsoid E(s1, s2);
        Catalog cat = ellipsoid_catalog(E);
        i64 M = 10;
        DensityReport d;
        while (true) {
            d = density_report(cat, ExactReal(M), {}, {}, {});
            if (d.total >= min_sets) break;
            M = M * 5 / 4 + 1;
        }
        i64 lc = lattice_count(s1, s2, ExactReal(M));
        double ratio = double(M) * M / double(d.total);
        double rel = std::fabs(ratio - 2 * a * b) / (2 * a * b);
        bool density_ok = rel < density_tol && lc == d.total;
        r.passed = lattice_ok && density_ok;
        r.data = {{"sweep", sweep},       {"fitted_C", C},       {"ratio_spread", spread}, {"density_M", M},
                  {"lambda_size", d.total}, {"lattice_count", lc}, {"M2_over_lambda", ratio}, {"density_rel_error", rel}};
        r.detail = "fitted C " + fmt(C) + " (ratio spread " + fmt(spread) + " over T in [" + fmt(t_min) + ", " + fmt(t_max) +
                   "]); M = " + std::to_string(M) + ", |Lambda| = " + std::to_string(d.total) + ", M^2/|Lambda| = " +
                   fmt(ratio) + " vs 2ab = " + fmt(2 * a * b) + " (rel " + fmt(rel) + ")";
        return r;
    });
}

CheckResult index_laws(size_t triples, size_t pairs, std::uint64_t seed) {
    return timed("index_laws", [&] {
        CheckResult r;
        std::mt19937_64 rng(seed);
        auto uni = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
        // catalog over Z/2 + Z/3 with mixed orbit kinds
        HomologyGroup G({2, 3});
        std::vector<SimpleOrbit> orbits{
            SimpleOrbit::elliptic("g1", ExactReal(1), ExactReal::surd(-1, 1, 2, 1), {1, 0}),
            SimpleOrbit::elliptic("g2", Rational(3, 2), ExactReal::surd(1, 1, 5, 4), {0, 1}),
            SimpleOrbit::hyperbolic("h1", OrbitKind::negative_hyperbolic, Rational(5, 2), -1, {1, 1}),
            SimpleOrbit::hyperbolic("h2", OrbitKind::positive_hyperbolic, Rational(7, 3), 2, {0, 2}),
            SimpleOrbit::hyperbolic("h3", OrbitKind::negative_hyperbolic, Rational(4, 3), 3, {1, 2}),
        };
        auto random_set = [&](const std::vector<i64>& cls) {
            // rejection sampling on the homology class
            while (true) {
                OrbitSet s(G);
                for (const auto& o : orbits) {
                    i64 m = o.is_hyperbolic() ? uni(0, 1) : uni(0, 6);
                    if (m) s.add(o, m);
                }
                if (cls.empty() || s.homology_class() == cls) return s;
            }
        };
        size_t bad_i = 0, bad_j = 0;
        for (size_t t = 0; t < triples; ++t) {
            OrbitSet a = random_set({});
            std::vector<i64> cls = a.homology_class();
            OrbitSet b = random_set(cls), c = random_set(cls);
            RelData r1{uni(-20, 20), uni(-20, 20)}, r2{uni(-20, 20), uni(-20, 20)};
            i64 q12 = uni(-10, 10);
            RelData r12 = compose(r1, r2, q12);
            if (ech_index(a, b, r1) + ech_index(b, c, r2) + 2 * q12 != ech_index(a, c, r12)) ++bad_i;
            if (j0_index(a, b, r1) + j0_index(b, c, r2) + 2 * q12 != j0_index(a, c, r12)) ++bad_j;
        }
        Ellipsoid E(ExactReal(1), ExactReal::sqrt_of(Rational(2)));
        Catalog cat = ellipsoid_catalog(E);
        std::vector<Generator> gens = generators_by_action(E, 400);
        size_t bad_parity = 0, bad_grading = 0;
        for (size_t t = 0; t < pairs; ++t) {
            const Generator& g1 = gens[static_cast<size_t>(uni(0, static_cast<i64>(gens.size()) - 1))];
            const Generator& g2 = gens[static_cast<size_t>(uni(0, static_cast<i64>(gens.size()) - 1))];
            OrbitSet a = ellipsoid_orbit_set(cat, g1), b = ellipsoid_orbit_set(cat, g2);
            RelData ra = ellipsoid_rel_data(g1), rb = ellipsoid_rel_data(g2);
            i64 I = ech_index(a, b, {ra.c1 - rb.c1, ra.q - rb.q});
            if (!parity_check(a, b, I)) ++bad_parity;
            if (I != gen_index(E, g1) - gen_index(E, g2)) ++bad_grading;
        }
        r.passed = bad_i + bad_j + bad_parity + bad_grading == 0;
        r.data = {{"triples", triples}, {"pairs", pairs}, {"ech_additivity_failures", bad_i}, {"j0_additivity_failures", bad_j},
                  {"parity_failures", bad_parity}, {"grading_failures", bad_grading}};
        r.detail = std::to_string(triples) + " triples: I failures " + std::to_string(bad_i) + ", J0 failures " +
                   std::to_string(bad_j) + "; " + std::to_string(pairs) + " ellipsoid pairs: parity failures " +
                   std::to_string(bad_parity) + ", grading failures " + std::to_string(bad_grading);
        return r;
    });
}

std::vector<CheckResult> run_all(const SuiteConfig& c, unsigned jobs) {
    std::vector<std::function<CheckResult()>> tasks{
        [&] { return sset_laws(c.sset_surds, c.sset_qmax, c.seed); },
        [&] { return partition_laws(c.partition_surds, c.partition_max_m, c.seed + 1); },
        [&] { return floor_step_law(c.floor_surds, c.floor_qmax, c.seed + 2); },
        [] { return topo_tables(); },
        [] { return fixture_suite(); },
        [] { return transition_tables(); },
        [&] { return volume_law(c.volume_k_small, c.volume_k_large, c.volume_tol); },
        [&] { return counting_laws(c.lattice_t_min, c.lattice_t_max, c.lattice_spread_tol, c.density_min_sets, c.density_tol); },
        [&] { return index_laws(c.index_triples, c.index_pairs, c.seed + 3); },
    };
    std::vector<CheckResult> out(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < tasks.size();) out[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

nlohmann::json to_json(const CheckResult& r) {
    return {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}};
}

}  // namespace ech::suite
