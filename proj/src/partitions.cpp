#include "ech/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ech {

std::string to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::elliptic: return "elliptic";
        case OrbitKind::positive_hyperbolic: return "positive_hyperbolic";
        case OrbitKind::negative_hyperbolic: return "negative_hyperbolic";
    }
    return "?";
}

OrbitKind orbit_kind_from_string(const std::string& s) {
    if (s == "elliptic") return OrbitKind::elliptic;
    if (s == "positive_hyperbolic" || s == "h+") return OrbitKind::positive_hyperbolic;
    if (s == "negative_hyperbolic" || s == "h-") return OrbitKind::negative_hyperbolic;
    throw std::invalid_argument("unknown orbit kind '" + s + "'");
}

void require_irrational(const ExactReal& theta) {
    if (!theta.is_irrational()) throw std::invalid_argument("elliptic rotation number must be irrational");
}

bool SSet::contains(i64 q) const { return std::binary_search(members.begin(), members.end(), q); }

i64 SSet::max_at_most(i64 m) const {
    if (m < 1) throw std::out_of_range("no member of S below 1");
    if (m > bound) throw std::out_of_range("query beyond computed bound");
    auto it = std::upper_bound(members.begin(), members.end(), m);
    return *(it - 1);
}

std::optional<i64> SSet::successor(i64 q) const {
    auto it = std::upper_bound(members.begin(), members.end(), q);
    if (it == members.end()) return std::nullopt;
    return *it;
}

i64 SSet::largest_gap() const {
    i64 g = 0;
    for (size_t i = 1; i < members.size(); ++i) g = std::max(g, members[i] - members[i - 1]);
    return g;
}

i64 Partition::total() const {
    i64 t = 0;
    for (i64 e : entries) t += e;
    return t;
}

SSet s_theta(const ExactReal& theta, i64 qmax) {
    require_irrational(theta);
    if (qmax < 1) throw std::invalid_argument("qmax must be positive");
    SSet s;
    s.theta = theta;
    s.bound = qmax;
    s.members.push_back(1);
    i64 best = 1;  // current minimiser of ceil(q theta)/q
    for (i64 q = 2; q <= qmax; ++q) {
        if (cmp_ceil_fractions(q, best, theta) == std::strong_ordering::less) {
            s.members.push_back(q);
            best = q;
        }
    }
    return s;
}

Partition partition_in(const ExactReal& theta, i64 M) {
    require_irrational(theta);
    if (M < 0) throw std::invalid_argument("multiplicity must be nonnegative");
    Partition p;
    if (M == 0) return p;
    SSet s = s_theta(theta, M);
    i64 rem = M;
    while (rem > 0) {
        i64 a = s.max_at_most(rem);
        p.entries.push_back(a);
        rem -= a;
    }
    return p;
}

Partition partition_out(const ExactReal& theta, i64 M) { return partition_in(-theta, M); }

Partition partition_orbit(OrbitKind kind, Direction dir, i64 M, const std::optional<ExactReal>& theta) {
    if (M < 1) throw std::invalid_argument("multiplicity must be positive");
    if (kind == OrbitKind::elliptic) {
        if (!theta) throw std::invalid_argument("elliptic partition needs a rotation number");
        return dir == Direction::in ? partition_in(*theta, M) : partition_out(*theta, M);
    }
    if (theta) throw std::invalid_argument("hyperbolic partition takes no rotation number");
    Partition p;
    if (kind == OrbitKind::positive_hyperbolic) {
        p.entries.assign(static_cast<size_t>(M), 1);
    } else {
        p.entries.assign(static_cast<size_t>(M / 2), 2);
        if (M % 2 == 1) p.entries.push_back(1);
    }
    return p;
}

bool is_initial_segment(const Partition& candidate, const Partition& reference) {
    if (candidate.entries.size() > reference.entries.size()) return false;
    return std::equal(candidate.entries.begin(), candidate.entries.end(), reference.entries.begin());
}

}  // namespace ech
