#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ech/exactreal.hpp"

namespace ech {

enum class OrbitKind { elliptic, positive_hyperbolic, negative_hyperbolic };

std::string to_string(OrbitKind k);
OrbitKind orbit_kind_from_string(const std::string& s);

// S_theta intersected with [1, bound], increasing; members.front() == 1.
struct SSet {
    ExactReal theta;
    i64 bound = 0;
    std::vector<i64> members;

    bool contains(i64 q) const;
    // largest member <= m (m >= 1)
    i64 max_at_most(i64 m) const;
    // next member after q, if it is within the bound
    std::optional<i64> successor(i64 q) const;
    // largest gap between consecutive members
    i64 largest_gap() const;
};

struct Partition {
    std::vector<i64> entries;  // nonincreasing
    i64 total() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

enum class Direction { in, out };

SSet s_theta(const ExactReal& theta, i64 qmax);
Partition partition_in(const ExactReal& theta, i64 M);
Partition partition_out(const ExactReal& theta, i64 M);
Partition partition_orbit(OrbitKind kind, Direction dir, i64 M, const std::optional<ExactReal>& theta = std::nullopt);
bool is_initial_segment(const Partition& candidate, const Partition& reference);

void require_irrational(const ExactReal& theta);

}  // namespace ech
