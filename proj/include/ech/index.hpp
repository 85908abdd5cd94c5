#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ech/exactreal.hpp"
#include "ech/partitions.hpp"
#include "json.hpp"

namespace ech {

// Finite abelian group Z/f1 + ... + Z/fr, presented by invariant factors.
struct HomologyGroup {
    std::vector<i64> factors;

    explicit HomologyGroup(std::vector<i64> f = {});
    std::vector<i64> reduce(std::vector<i64> v) const;
    std::vector<i64> zero() const { return std::vector<i64>(factors.size(), 0); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct SimpleOrbit {
    std::string name;
    OrbitKind kind = OrbitKind::elliptic;
    ExactReal action;
    std::optional<ExactReal> rotation;  // elliptic only
    i64 cz = 0;                         // hyperbolic only
    std::vector<i64> homology;

    static SimpleOrbit elliptic(std::string name, ExactReal action, ExactReal rotation, std::vector<i64> h = {});
    static SimpleOrbit hyperbolic(std::string name, OrbitKind kind, ExactReal action, i64 cz, std::vector<i64> h = {});
    void validate() const;
    bool is_hyperbolic() const { return kind != OrbitKind::elliptic; }
};

struct OrbitSet {
    HomologyGroup group;
    std::vector<std::pair<SimpleOrbit, i64>> items;

    OrbitSet() = default;
    explicit OrbitSet(HomologyGroup g) : group(std::move(g)) {}
    // adds multiplicity m of orbit o (merging with an existing entry of the same name)
    OrbitSet& add(const SimpleOrbit& o, i64 m = 1);
    bool admissible() const;
    std::vector<i64> homology_class() const;
    i64 multiplicity(const std::string& name) const;
};

struct RelData {
    i64 c1 = 0;
    i64 q = 0;
};

// Relative data of a composite class Z1 + Z2 from its parts and the cross term Q(Z1, Z2).
RelData compose(const RelData& r1, const RelData& r2, i64 q12 = 0);

struct Catalog {
    HomologyGroup group;
    std::vector<SimpleOrbit> orbits;
    std::optional<ExactReal> coverage;  // every orbit of action below this is listed; empty means complete

    const SimpleOrbit& find(const std::string& name) const;
    static Catalog from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// {"catalog": {...}, "set": [{"orbit": name, "multiplicity": m}, ...]}
OrbitSet orbit_set_from_json(const nlohmann::json& j);
OrbitSet orbit_set_from_json(const nlohmann::json& j, const Catalog& catalog);

ExactReal action(const OrbitSet& a);
i64 e_count(const OrbitSet& a, const SimpleOrbit& gamma);
i64 h_count(const OrbitSet& a);
i64 cz_power(const SimpleOrbit& orbit, i64 k);
// sum of cz_power(orbit, j) for j = 1..k
i64 cz_sum(const SimpleOrbit& orbit, i64 k);
i64 ech_index(const OrbitSet& a, const OrbitSet& b, const RelData& rel);
i64 j0_index(const OrbitSet& a, const OrbitSet& b, const RelData& rel);
bool parity_check(const OrbitSet& a, const OrbitSet& b, i64 I);

enum class Realizability { realizable, unrealizable, unclassified };
std::string to_string(Realizability r);

struct TopoType {
    i64 g = 0;
    i64 k = 0;
    i64 l = 0;
    Realizability flag = Realizability::unclassified;
    std::string note;
};

std::vector<TopoType> topo_types(i64 j0);

// floor(N theta) - floor((N - p) theta) - floor(p theta) for consecutive members p < p_next of S_{-theta}
i64 floor_step(const ExactReal& theta, i64 p, i64 p_next, i64 N);

}  // namespace ech
