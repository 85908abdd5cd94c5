#include "ech/transitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ech::trans {

using feas::CertKind;
using feas::Certificate;
using feas::Disequality;
using feas::Inequality;
using feas::LinForm;
using feas::Relation;
using feas::RelationSystem;
using feas::SSide;
using feas::Sym;
using feas::Verdict;

std::string to_string(TType t) {
    switch (t) {
        case TType::a: return "a";
        case TType::a_p: return "a'";
        case TType::b: return "b";
        case TType::b_p: return "b'";
        case TType::c: return "c";
        case TType::c_p: return "c'";
    }
    return "?";
}

TType ttype_from_string(const std::string& s) {
    for (TType t : kAllTypes)
        if (to_string(t) == s) return t;
    if (s == "a_p") return TType::a_p;
    if (s == "b_p") return TType::b_p;
    if (s == "c_p") return TType::c_p;
    throw std::invalid_argument("unknown transition type '" + s + "'");
}

bool primed(TType t) { return t == TType::a_p || t == TType::b_p || t == TType::c_p; }

TType mirror(TType t) {
    switch (t) {
        case TType::a: return TType::a_p;
        case TType::a_p: return TType::a;
        case TType::b: return TType::b_p;
        case TType::b_p: return TType::b;
        case TType::c: return TType::c_p;
        case TType::c_p: return TType::c;
    }
    return t;
}

std::string ActionExpr::str(const std::string& base) const {
    feas::LinExpr e;
    if (!c_base.is_zero()) e.terms[base] = c_base;
    if (!c_succ.is_zero()) e.terms[base + "'"] = c_succ;
    return e.str();
}

std::string to_string(Granularity g) { return g == Granularity::argument ? "argument" : "full"; }

Granularity granularity_from_string(const std::string& s) {
    if (s == "argument") return Granularity::argument;
    if (s == "full") return Granularity::full;
    throw std::invalid_argument("unknown granularity '" + s + "' (expected argument or full)");
}

// ---------------------------------------------------------------- profiles

namespace {

const Rational kHalf(1, 2);

ActionExpr ex(Rational b, Rational s) { return {b, s}; }

// Side tables for the unprimed types; primed types swap the two sides.
SideProfile unprimed_side(TType t, bool upper) {
    switch (t) {
        case TType::a:
            return upper ? SideProfile{{ex(-1, 1)}, {ex(0, kHalf), ex(-kHalf, kHalf)}}
                         : SideProfile{{ex(0, 1)}, {ex(0, kHalf), ex(-kHalf, kHalf)}};
        case TType::b:
            return upper ? SideProfile{{}, {ex(kHalf, 0), ex(Rational(1, 4), 0)}}
                         : SideProfile{{ex(kHalf, 0), ex(kHalf, 0)}, {ex(kHalf, 0), ex(Rational(1, 4), 0)}};
        case TType::c:
            return upper ? SideProfile{{}, {ex(kHalf, 0), ex(Rational(1, 6), 0)}}
                         : SideProfile{{ex(Rational(2, 3), 0), ex(Rational(1, 3), 0)}, {ex(kHalf, 0), ex(Rational(1, 6), 0)}};
        default: break;
    }
    throw std::logic_error("unprimed_side needs an unprimed type");
}

SideProfile side(TType t, bool upper) { return primed(t) ? unprimed_side(mirror(t), !upper) : unprimed_side(t, upper); }

std::optional<Rational> succ_ratio(TType t) {
    TType u = primed(t) ? mirror(t) : t;
    if (u == TType::b) return Rational(3, 2);
    if (u == TType::c) return Rational(4, 3);
    return std::nullopt;
}

}  // namespace

TransitionProfile profile(TType t) {
    TransitionProfile p;
    p.type = t;
    p.base = primed(t) ? "q_i" : "p_i";
    p.succ_ratio = succ_ratio(t);
    p.larger_e_side = primed(t) ? "lower" : "upper";
    p.e_delta = p.base;
    p.upper = side(t, true);
    p.lower = side(t, false);
    // the side whose delta orbits carry the largest value
    auto top = [&](const SideProfile& s) -> std::optional<ActionExpr> {
        if (s.fixed.empty()) return std::nullopt;
        return s.fixed.front();
    };
    bool use_lower = !primed(t);
    const SideProfile& s = use_lower ? p.lower : p.upper;
    p.largest_f_side = use_lower ? "lower" : "upper";
    p.largest_f = *top(s);
    p.largest_f_multiplicity_lower_bound =
        static_cast<int>(std::count(s.fixed.begin(), s.fixed.end(), p.largest_f));
    auto hat_min = [](const SideProfile& u) { return 5 - static_cast<int>(u.fixed.size()); };
    p.alpha_hat_min = std::max(hat_min(p.upper), hat_min(p.lower));
    return p;
}

// ---------------------------------------------------------------- f-map

std::optional<GridValue> f_grid(const Rational& action, const Rational& R, const Rational& eps) {
    if (R.sign() <= 0 || eps.sign() <= 0) throw std::invalid_argument("f_grid needs R > 0 and eps_prime > 0");
    if (!(eps < R / Rational(24))) throw std::invalid_argument("ambiguous rounding: eps_prime must be below R/24");
    Rational x = action * Rational(12) / R;
    i64 k = (x + kHalf).floor();
    Rational v = Rational(k) * R / Rational(12);
    if (!(abs(action - v) < eps)) return std::nullopt;
    return GridValue{k, v};
}

// ---------------------------------------------------------------- families

Families families_for(TType t1, TType t2, Granularity g) {
    if (g == Granularity::full) return {true, true, true, true};
    using T = TType;
    auto is = [&](std::initializer_list<std::pair<T, T>> l) {
        return std::any_of(l.begin(), l.end(), [&](const auto& p) { return p.first == t1 && p.second == t2; });
    };
    if (is({{T::b_p, T::a_p}, {T::c_p, T::a_p}, {T::a, T::b}, {T::a, T::c}})) return {true, true, true, true};
    if (is({{T::b_p, T::b_p}, {T::b_p, T::c_p}, {T::b, T::b}, {T::c, T::b}})) return {true, false, false};
    if (is({{T::c_p, T::a}, {T::a_p, T::c}, {T::a, T::a_p}})) return {false, false, true, true};
    if (is({{T::a, T::a}, {T::a_p, T::a_p}})) return {true, true, false};
    return {};
}

const std::vector<std::pair<TType, TType>>& expected_allowed_pairs() {
    using T = TType;
    static const std::vector<std::pair<T, T>> v{{T::b, T::a}, {T::a, T::b_p}, {T::b, T::b_p}, {T::c, T::b_p},
                                                {T::a_p, T::b_p}, {T::c, T::a}, {T::a, T::c_p}, {T::b, T::c_p},
                                                {T::c, T::c_p}, {T::a_p, T::c_p}, {T::b, T::a_p}, {T::c, T::a_p}};
    return v;
}

namespace {

std::string pair_note(TType t1, TType t2) {
    using T = TType;
    auto is = [&](T x, T y) { return (t1 == x && t2 == y) || (t1 == mirror(y) && t2 == mirror(x)); };
    if (is(T::a_p, T::a)) return "largest f values are successors taken from different S-sets";
    if (is(T::b_p, T::a)) return "the largest f value has two preimages on one side and one on the other";
    if (is(T::b_p, T::a_p) || is(T::c_p, T::a_p))
        return "multiplicity arithmetic orders the members and the remaining f values cannot be matched";
    if (is(T::b_p, T::b) || is(T::c_p, T::c)) return "largest f values are members of different S-sets";
    if (is(T::b_p, T::b_p) || is(T::b_p, T::c_p))
        return "multiplicity arithmetic makes one largest f value exceed the other";
    if (is(T::b_p, T::c) || is(T::c_p, T::b_p) || is(T::c_p, T::c_p)) return "image sizes of f differ";
    if (is(T::c_p, T::a)) return "matching all f values forces a successor gap equal to its member";
    if (is(T::a, T::a)) return "multiplicity arithmetic orders the members so the largest f values cannot agree";
    if (is(T::a, T::a_p)) return "matching all f values equates values from different S-sets";
    return "remaining pair";
}

// ---------------------------------------------------------------- joint systems

struct Step {
    TType t;
    std::string B, Bp, M;
};

Step make_step(TType t, size_t i) {
    std::string n = std::to_string(i + 1);
    std::string B = (primed(t) ? "Q" : "P") + n;
    return {t, B, B + "'", "M" + n};
}

// A distinct f value on one side of a middle orbit set.
struct Value {
    ActionExpr e;
    int fixed = 0;
    std::vector<int> eta;  // eta options taking this value
};

std::vector<Value> view_values(TType t, bool upper, unsigned presence) {
    SideProfile s = side(t, upper);
    std::vector<Value> out;
    auto slot = [&](const ActionExpr& e) -> Value& {
        for (auto& v : out)
            if (v.e == e) return v;
        out.push_back({e, 0, {}});
        return out.back();
    };
    for (const auto& e : s.fixed) ++slot(e).fixed;
    for (size_t o = 0; o < s.eta.size(); ++o)
        if (presence & (1u << o)) slot(s.eta[o]).eta.push_back(static_cast<int>(o));
    return out;
}

LinForm value_form(const Step& s, const ActionExpr& e) {
    LinForm f;
    if (!e.c_base.is_zero()) f[s.B] += e.c_base;
    if (!e.c_succ.is_zero()) f[s.Bp] += e.c_succ;
    return f;
}

std::string value_str(const Step& s, const ActionExpr& e) { return feas::LinExpr{value_form(s, e), Rational(0)}.str(); }

LinForm lin(std::initializer_list<std::pair<std::string, Rational>> l) {
    LinForm f;
    for (const auto& [n, c] : l) f[n] += c;
    for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
    return f;
}

LinForm sub(const LinForm& a, const LinForm& b) {
    LinForm f = a;
    for (const auto& [n, c] : b) f[n] -= c;
    for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
    return f;
}

struct Junction {
    Families fam;
    int order = -1;                        // S-set order branch, -1 when not branched
    std::vector<std::pair<int, int>> match;  // (value on the earlier step's side, value on the later step's side)
};

struct Plan {
    std::vector<Step> steps;
    std::vector<unsigned> presence;  // eta presence per step
    std::vector<Junction> junctions;
};

// Values of middle set j: the upper side of step j and the lower side of step j+1.
std::vector<Value> earlier_view(const Plan& p, size_t j) { return view_values(p.steps[j].t, true, p.presence[j]); }
std::vector<Value> later_view(const Plan& p, size_t j) { return view_values(p.steps[j + 1].t, false, p.presence[j + 1]); }

RelationSystem build(const Plan& p, size_t nj) {
    RelationSystem sys;
    sys.gap_rules = false;
    const size_t ns = nj + 1;
    std::vector<bool> with_m(ns, false);
    for (size_t j = 0; j < nj; ++j)
        if (p.junctions[j].fam.e_arith) with_m[j] = with_m[j + 1] = true;

    for (size_t s = 0; s < ns; ++s) {
        const Step& st = p.steps[s];
        Sym b = Sym::member(st.B, primed(st.t) ? SSide::theta : SSide::minus_theta, true);
        b.note = "the elliptic multiplicities exceed p_1 and q_1";
        Sym bp = Sym::successor(st.Bp, st.B, true);
        bp.note = "the multiplicity lies strictly between the member and its successor and is not in the S-sets";
        sys.symbols.push_back(b);
        sys.symbols.push_back(bp);
        if (auto r = succ_ratio(st.t))
            sys.relations.push_back({lin({{st.Bp, Rational(1)}, {st.B, -*r}}), Rational(0), Rational(0),
                                     "type " + to_string(st.t) + ": " + st.Bp + " = " + r->str() + "*" + st.B});
        if (with_m[s]) {
            sys.symbols.push_back(Sym::multiplicity(st.M));
            sys.inequalities.push_back({lin({{st.M, Rational(1)}, {st.B, Rational(-1)}}), Rational(0), false,
                                        st.B + " <= " + st.M + ": largest member up to the multiplicity"});
            sys.inequalities.push_back({lin({{st.Bp, Rational(1)}, {st.M, Rational(-1)}}), Rational(0), true,
                                        st.M + " < " + st.Bp + ": the successor exceeds the multiplicity"});
        }
    }
    for (size_t j = 0; j < nj; ++j) {
        const Junction& J = p.junctions[j];
        const Step& s1 = p.steps[j];
        const Step& s2 = p.steps[j + 1];
        std::string mid = "alpha" + std::to_string(j + 1);
        if (J.fam.gaps) sys.gap_rules = true;
        if (J.fam.e_arith) {
            std::string E = "E" + std::to_string(j + 1);
            sys.symbols.push_back(Sym::multiplicity(E));
            // the earlier step ends at the middle set from above, the later one leaves it upwards
            LinForm e1 = primed(s1.t) ? lin({{s1.M, Rational(1)}, {s1.B, Rational(-1)}}) : lin({{s1.M, Rational(1)}});
            LinForm e2 = primed(s2.t) ? lin({{s2.M, Rational(1)}}) : lin({{s2.M, Rational(1)}, {s2.B, Rational(-1)}});
            sys.relations.push_back({sub(lin({{E, Rational(1)}}), e1), Rational(0), Rational(0),
                                     E + " = E(" + mid + ") seen from type " + to_string(s1.t)});
            sys.relations.push_back({sub(lin({{E, Rational(1)}}), e2), Rational(0), Rational(0),
                                     E + " = E(" + mid + ") seen from type " + to_string(s2.t)});
            sys.inequalities.push_back({lin({{E, Rational(1)}}), Rational(-2), false, E + " >= 2"});
        }
        if (J.fam.s_order && J.order >= 0) {
            const std::string &a = s1.B, &ap = s1.Bp, &b = s2.B, &bp = s2.Bp;
            if (J.order == 0) {
                sys.inequalities.push_back({lin({{a, Rational(1)}, {b, Rational(-1)}}), Rational(0), true, b + " < " + a});
                sys.inequalities.push_back({lin({{a, Rational(1)}, {bp, Rational(-1)}}), Rational(0), false,
                                            bp + " <= " + a + ": consecutive members of one S-set"});
            } else if (J.order == 1) {
                sys.relations.push_back({lin({{a, Rational(1)}, {b, Rational(-1)}}), Rational(0), Rational(0), a + " = " + b});
                sys.relations.push_back({lin({{ap, Rational(1)}, {bp, Rational(-1)}}), Rational(0), Rational(0),
                                         ap + " = " + bp + ": equal members have equal successors"});
            } else {
                sys.inequalities.push_back({lin({{b, Rational(1)}, {a, Rational(-1)}}), Rational(0), true, a + " < " + b});
                sys.inequalities.push_back({lin({{b, Rational(1)}, {ap, Rational(-1)}}), Rational(0), false,
                                            ap + " <= " + b + ": consecutive members of one S-set"});
            }
        }
        std::vector<Value> v1 = earlier_view(p, j), v2 = later_view(p, j);
        for (const auto& [x, y] : J.match) {
            LinForm d = sub(value_form(s1, v1[x].e), value_form(s2, v2[y].e));
            sys.relations.push_back({d, Rational(0), Rational(0),
                                     "f values agree on " + mid + ": " + value_str(s1, v1[x].e) + " = " + value_str(s2, v2[y].e)});
        }
        if (J.fam.full) {
            auto distinct = [&](const Step& s, const std::vector<Value>& v) {
                for (size_t x = 0; x < v.size(); ++x)
                    for (size_t y = x + 1; y < v.size(); ++y)
                        sys.disequalities.push_back({sub(value_form(s, v[x].e), value_form(s, v[y].e)), Rational(0),
                                                     "distinct f values " + value_str(s, v[x].e) + " != " + value_str(s, v[y].e)});
            };
            distinct(s1, v1);
            distinct(s2, v2);
        } else if (!J.match.empty()) {
            // the matched pair is the largest value on both sides
            auto largest = [&](const Step& s, const std::vector<Value>& v, int x) {
                for (size_t y = 0; y < v.size(); ++y) {
                    if (static_cast<int>(y) == x) continue;
                    sys.inequalities.push_back({sub(value_form(s, v[x].e), value_form(s, v[y].e)), Rational(0), true,
                                                "largest f value " + value_str(s, v[x].e) + " > " + value_str(s, v[y].e)});
                }
            };
            largest(s1, v1, J.match.front().first);
            largest(s2, v2, J.match.front().second);
        }
    }
    // multiplicities of orbit sets in the chain avoid both S-sets
    std::vector<std::string> members;
    for (const auto& s : sys.symbols)
        if (s.kind == feas::SymKind::s_member || s.kind == feas::SymKind::s_successor) members.push_back(s.name);
    for (size_t s = 0; s < ns; ++s) {
        if (!with_m[s]) continue;
        const Step& st = p.steps[s];
        for (const auto& m : members) {
            sys.disequalities.push_back({lin({{st.M, Rational(1)}, {m, Rational(-1)}}), Rational(0), st.M + " != " + m + ": E avoids the S-sets"});
            sys.disequalities.push_back({lin({{st.M, Rational(1)}, {st.B, Rational(-1)}, {m, Rational(-1)}}), Rational(0),
                                         st.M + " - " + st.B + " != " + m + ": E avoids the S-sets"});
        }
    }
    return sys;
}

// Integer-free check that multiplicities of matched values can agree with |alpha-hat| bounds.
bool counts_feasible(const Plan& p, size_t nj) {
    const size_t ns = nj + 1;
    std::vector<std::array<int, 2>> var(ns, {-1, -1});
    size_t n = 0;
    for (size_t s = 0; s < ns; ++s)
        for (int o = 0; o < 2; ++o)
            if (p.presence[s] & (1u << o)) var[s][o] = static_cast<int>(n++);
    std::vector<feas::LinearConstraint> cs;
    auto row = [&] { return feas::LinearConstraint{std::vector<Rational>(n), Rational(0), false, false}; };
    for (size_t s = 0; s < ns; ++s) {
        auto total = row();
        for (int o = 0; o < 2; ++o) {
            if (var[s][o] < 0) continue;
            auto c = row();
            c.coeffs[var[s][o]] = Rational(1);
            c.constant = Rational(-1);
            cs.push_back(c);
            total.coeffs[var[s][o]] = Rational(1);
        }
        total.constant = Rational(-profile(p.steps[s].t).alpha_hat_min);
        cs.push_back(total);
    }
    for (size_t j = 0; j < nj; ++j) {
        std::vector<Value> v1 = earlier_view(p, j), v2 = later_view(p, j);
        for (const auto& [x, y] : p.junctions[j].match) {
            auto c = row();
            c.equality = true;
            c.constant = Rational(v1[x].fixed - v2[y].fixed);
            for (int o : v1[x].eta) c.coeffs[var[j][o]] += Rational(1);
            for (int o : v2[y].eta) c.coeffs[var[j + 1][o]] -= Rational(1);
            cs.push_back(c);
        }
    }
    return feas::linear_feasible(n, cs);
}

std::string describe(const Plan& p, size_t nj) {
    std::string d;
    for (size_t s = 0; s <= nj; ++s) {
        SideProfile sp = side(p.steps[s].t, true);
        std::string e;
        for (size_t o = 0; o < sp.eta.size(); ++o)
            if (p.presence[s] & (1u << o)) e += (e.empty() ? "" : ", ") + value_str(p.steps[s], sp.eta[o]);
        d += (s ? "; " : "") + std::string("eta") + std::to_string(s + 1) + " in {" + e + "}";
    }
    for (size_t j = 0; j < nj; ++j) {
        const Junction& J = p.junctions[j];
        const Step &s1 = p.steps[j], &s2 = p.steps[j + 1];
        if (J.order == 0) d += "; " + s2.B + " < " + s1.B;
        if (J.order == 1) d += "; " + s2.B + " = " + s1.B;
        if (J.order == 2) d += "; " + s1.B + " < " + s2.B;
        std::vector<Value> v1 = earlier_view(p, j), v2 = later_view(p, j);
        d += J.fam.full ? "; match" : "; largest";
        for (const auto& [x, y] : J.match) d += " " + value_str(s1, v1[x].e) + "=" + value_str(s2, v2[y].e);
    }
    return d;
}

int priority(const Verdict& v) {
    if (v.feasible) return -1;
    switch (v.certificate->kind) {
        case CertKind::cross_set_equality: return 0;
        case CertKind::successor_gap_equals_base: return 1;
        case CertKind::successor_equals_base: return 2;
        case CertKind::zero_quantity: return 3;
        case CertKind::nonpositive_quantity: return 4;
        case CertKind::inconsistent: return 5;
        case CertKind::disequality_violated: return 6;
        case CertKind::inequality_conflict: return 7;
        case CertKind::count_mismatch: return 8;
    }
    return 9;
}

Verdict count_verdict(const std::string& why) {
    Verdict v;
    Certificate c;
    c.kind = CertKind::count_mismatch;
    c.statement = why;
    v.certificate = c;
    return v;
}

struct Search {
    std::vector<TType> types;
    std::vector<Families> fams;
    size_t branches = 0;
    std::optional<BranchReport> best;  // first feasible, else best infeasible
    bool found = false;

    void record(const Plan& p, size_t nj, Verdict v, RelationSystem sys) {
        ++branches;
        if (found) return;
        if (v.feasible) {
            found = true;
            best = BranchReport{describe(p, nj), std::move(v), std::move(sys)};
            return;
        }
        if (!best || priority(v) < priority(best->verdict)) best = BranchReport{describe(p, nj), std::move(v), std::move(sys)};
    }

    // Extends a plan with junction j (steps j and j+1); step j's presence is already set.
    void explore(Plan& p, size_t j) {
        const size_t nj = types.size() - 1;
        if (j == nj) return;
        const Step &s1 = p.steps[j], &s2 = p.steps[j + 1];
        const bool same_set = primed(s1.t) == primed(s2.t);
        std::vector<int> orders = fams[j].s_order && same_set ? std::vector<int>{0, 1, 2} : std::vector<int>{-1};
        for (unsigned pres = 1; pres <= 3; ++pres) {
            p.presence[j + 1] = pres;
            std::vector<Value> v1 = earlier_view(p, j), v2 = later_view(p, j);
            std::vector<std::vector<std::pair<int, int>>> matches;
            if (v1.size() != v2.size()) {
                Plan q = p;
                q.junctions[j] = {fams[j], -1, {}};
                record(q, j + 1, count_verdict("image sizes of f differ on the middle set: " + std::to_string(v1.size()) +
                                                   " vs " + std::to_string(v2.size())),
                       build(q, j + 1));
                continue;
            }
            if (fams[j].full) {
                std::vector<int> perm(v2.size());
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<std::pair<int, int>> m;
                    for (size_t x = 0; x < perm.size(); ++x) m.emplace_back(static_cast<int>(x), perm[x]);
                    matches.push_back(m);
                } while (std::next_permutation(perm.begin(), perm.end()));
            } else {
                for (size_t x = 0; x < v1.size(); ++x)
                    for (size_t y = 0; y < v2.size(); ++y) matches.push_back({{static_cast<int>(x), static_cast<int>(y)}});
            }
            for (int ord : orders) {
                for (const auto& m : matches) {
                    p.junctions[j] = {fams[j], ord, m};
                    RelationSystem sys = build(p, j + 1);
                    if (!counts_feasible(p, j + 1)) {
                        record(p, j + 1, count_verdict("multiplicities of matched f values cannot agree"), std::move(sys));
                        continue;
                    }
                    Verdict v = feas::solve(sys);
                    if (!v.feasible || j + 1 == nj) {
                        record(p, j + 1, std::move(v), std::move(sys));
                        continue;
                    }
                    explore(p, j + 1);
                }
            }
        }
    }

    void run() {
        Plan p;
        for (size_t i = 0; i < types.size(); ++i) p.steps.push_back(make_step(types[i], i));
        p.presence.assign(types.size(), 0);
        p.junctions.assign(types.size() - 1, {});
        for (unsigned pres = 1; pres <= 3; ++pres) {
            p.presence[0] = pres;
            explore(p, 0);
        }
    }
};

}  // namespace

PairResult compatible(TType t1, TType t2, Granularity g) {
    Search s;
    s.types = {t1, t2};
    s.fams = {families_for(t1, t2, g)};
    s.run();
    PairResult r;
    r.t1 = t1;
    r.t2 = t2;
    r.granularity = g;
    r.families = s.fams[0];
    r.verdict = s.best->verdict;
    r.system = s.best->system;
    r.branch = s.best->description;
    r.branches = s.branches;
    r.feasible_branches = s.found ? 1 : 0;
    const auto& ok = expected_allowed_pairs();
    r.expected_feasible = std::find(ok.begin(), ok.end(), std::make_pair(t1, t2)) != ok.end();
    r.citation = "pair (" + to_string(t1) + ", " + to_string(t2) + "): " + pair_note(t1, t2);
    return r;
}

std::vector<PairResult> all_pairs(Granularity g) {
    std::vector<PairResult> out;
    for (TType a : kAllTypes)
        for (TType b : kAllTypes) out.push_back(compatible(a, b, g));
    return out;
}

std::vector<std::pair<TType, TType>> allowed_pairs(Granularity g) {
    std::vector<std::pair<TType, TType>> out;
    for (const auto& r : all_pairs(g))
        if (r.verdict.feasible) out.emplace_back(r.t1, r.t2);
    return out;
}

std::vector<ChainResult> chain_check(Granularity g) {
    std::vector<std::pair<TType, TType>> ok = allowed_pairs(Granularity::argument);
    std::vector<ChainResult> out;
    for (const auto& [a, b] : ok) {
        for (const auto& [b2, c] : ok) {
            if (b2 != b) continue;
            Search s;
            s.types = {a, b, c};
            s.fams = {families_for(a, b, g), families_for(b, c, g)};
            s.run();
            ChainResult r;
            r.types = {a, b, c};
            r.verdict = s.best->verdict;
            r.system = s.best->system;
            r.branch = s.best->description;
            r.branches = s.branches;
            out.push_back(std::move(r));
        }
    }
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json side_json(const SideProfile& s, const std::string& base) {
    nlohmann::json f = nlohmann::json::array(), e = nlohmann::json::array();
    for (const auto& x : s.fixed) f.push_back(x.str(base));
    for (const auto& x : s.eta) e.push_back(x.str(base));
    return {{"delta", f}, {"eta", e}};
}

nlohmann::json families_json(const Families& f) {
    return {{"e_arith", f.e_arith}, {"s_order", f.s_order}, {"full_match", f.full}, {"gaps", f.gaps}};
}

}  // namespace

nlohmann::json to_json(const TransitionProfile& p) {
    std::string base = primed(p.type) ? "Q" : "P";
    nlohmann::json j{{"type", to_string(p.type)},
                     {"base", p.base},
                     {"larger_e_side", p.larger_e_side},
                     {"e_delta", p.e_delta},
                     {"upper", side_json(p.upper, base)},
                     {"lower", side_json(p.lower, base)},
                     {"largest_f", p.largest_f.str(base)},
                     {"largest_f_side", p.largest_f_side},
                     {"largest_f_multiplicity_lower_bound", p.largest_f_multiplicity_lower_bound},
                     {"alpha_hat_min", p.alpha_hat_min}};
    j["succ_ratio"] = p.succ_ratio ? nlohmann::json(p.succ_ratio->str()) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const PairResult& r) {
    return {{"pair", {to_string(r.t1), to_string(r.t2)}},
            {"granularity", to_string(r.granularity)},
            {"families", families_json(r.families)},
            {"computed", r.verdict.feasible ? "feasible" : "infeasible"},
            {"expected", r.expected_feasible ? "feasible" : "infeasible"},
            {"match", r.verdict.feasible == r.expected_feasible},
            {"citation", r.citation},
            {"branch", r.branch},
            {"branches", r.branches},
            {"verdict", feas::to_json(r.verdict, r.system)}};
}

nlohmann::json to_json(const ChainResult& r) {
    return {{"triple", {to_string(r.types[0]), to_string(r.types[1]), to_string(r.types[2])}},
            {"computed", r.verdict.feasible ? "feasible" : "infeasible"},
            {"branch", r.branch},
            {"branches", r.branches},
            {"verdict", feas::to_json(r.verdict, r.system)}};
}

}  // namespace ech::trans
