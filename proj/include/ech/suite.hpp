#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ech/exactreal.hpp"
#include "json.hpp"

namespace ech::suite {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    nlohmann::json data;
    double seconds = 0;
};

// Quadratic surds (a + b*sqrt(d))/c in (0, 1), drawn deterministically from the seed.
std::vector<ExactReal> random_surds(size_t count, std::uint64_t seed);

// S_theta ∩ [1, qmax] by the quadratic definition: every smaller q' has a larger ceiling fraction.
std::vector<i64> s_theta_brute(const ExactReal& theta, i64 qmax);

CheckResult sset_laws(size_t surds, i64 qmax, std::uint64_t seed);
CheckResult partition_laws(size_t surds, i64 max_m, std::uint64_t seed);
CheckResult floor_step_law(size_t surds, i64 qmax, std::uint64_t seed);
CheckResult topo_tables();
CheckResult fixture_suite();
CheckResult transition_tables();
// relative volume error at k_small must be below tol and shrink at k_large
CheckResult volume_law(i64 k_small, i64 k_large, double tol);
// lattice deviation / T over a geometric T sweep and the two-elliptic density ratio
CheckResult counting_laws(double t_min, double t_max, double spread_tol, i64 min_sets, double density_tol);
CheckResult index_laws(size_t triples, size_t pairs, std::uint64_t seed);

// Sample sizes and tolerances of the full invariant run.
struct SuiteConfig {
    std::uint64_t seed = 20240601;
    size_t sset_surds = 30;
    i64 sset_qmax = 1000;
    size_t partition_surds = 10;
    i64 partition_max_m = 500;
    size_t floor_surds = 20;
    i64 floor_qmax = 1000;
    i64 volume_k_small = 20000;
    i64 volume_k_large = 200000;
    double volume_tol = 0.02;
    double lattice_t_min = 100;
    double lattice_t_max = 10000;
    double lattice_spread_tol = 0.2;
    i64 density_min_sets = 10000;
    double density_tol = 0.05;
    size_t index_triples = 1000;
    size_t index_pairs = 1000;
};

// Every check, evaluated on up to `jobs` threads; results in a fixed order.
std::vector<CheckResult> run_all(const SuiteConfig& cfg, unsigned jobs = 1);

nlohmann::json to_json(const CheckResult& r);

}  // namespace ech::suite
