#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ech/exactreal.hpp"
#include "ech/index.hpp"

namespace ech {

struct Ellipsoid {
    ExactReal a;
    ExactReal b;
    bool irrational_ratio = false;

    Ellipsoid(ExactReal a_, ExactReal b_);
    ExactReal value(i64 m, i64 n) const { return a * ExactReal(m) + b * ExactReal(n); }
};

struct Generator {
    i64 m = 0;
    i64 n = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// The first `count` generators (m, n) in nondecreasing order of m*a + n*b, starting with (0, 0).
std::vector<Generator> generators_by_action(const Ellipsoid& E, i64 count);
ExactReal capacity(const Ellipsoid& E, i64 k);
i64 gen_index(const Ellipsoid& E, const Generator& g);
ExactReal volume_ratio(const Ellipsoid& E, i64 k);
i64 lattice_count(const ExactReal& S1, const ExactReal& S2, const ExactReal& T);

// Two elliptic orbits with the standard rotation numbers of the ellipsoid, trivial homology.
Catalog ellipsoid_catalog(const Ellipsoid& E);
// Relative data of the generator (m, n) against the empty set in the ellipsoid's standard trivialization.
RelData ellipsoid_rel_data(const Generator& g);
OrbitSet ellipsoid_orbit_set(const Catalog& c, const Generator& g);

struct DensityReport {
    i64 total = 0;
    std::string elliptic;                 // orbit whose multiplicity is E
    std::map<i64, i64> by_e;              // E(alpha) -> count
    std::map<i64, i64> by_h;              // H(alpha) -> count
    i64 in_s_theta = 0;                   // count with E(alpha) in S_theta
    std::map<i64, std::optional<double>> e_ratio;
    std::map<i64, std::optional<double>> h_ratio;
    std::optional<double> s_theta_ratio;
};

DensityReport density_report(const Catalog& catalog, const ExactReal& M, const std::vector<i64>& gamma_class,
                             const std::vector<i64>& ns, const std::vector<i64>& ms,
                             const std::optional<std::string>& elliptic = std::nullopt);

}  // namespace ech
