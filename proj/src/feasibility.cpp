#include "ech/feasibility.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace ech::feas {

SSide opposite(SSide s) { return s == SSide::theta ? SSide::minus_theta : SSide::theta; }

std::string to_string(SymKind k) {
    switch (k) {
        case SymKind::action: return "action";
        case SymKind::s_member: return "s_member";
        case SymKind::s_successor: return "s_successor";
        case SymKind::multiplicity: return "multiplicity";
    }
    return "?";
}

std::string to_string(SSide s) { return s == SSide::theta ? "S_theta" : "S_-theta"; }

std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::inconsistent: return "inconsistent";
        case CertKind::zero_quantity: return "zero_quantity";
        case CertKind::nonpositive_quantity: return "nonpositive_quantity";
        case CertKind::successor_equals_base: return "successor_equals_base";
        case CertKind::successor_gap_equals_base: return "successor_gap_equals_base";
        case CertKind::cross_set_equality: return "cross_set_equality";
        case CertKind::disequality_violated: return "disequality_violated";
        case CertKind::inequality_conflict: return "inequality_conflict";
        case CertKind::count_mismatch: return "count_mismatch";
    }
    return "?";
}

// ---------------------------------------------------------------- LinExpr

std::string LinExpr::str() const {
    std::string out;
    auto put = [&](Rational c, const std::string& name) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (name.empty()) out += a.str();
        else if (a == Rational(1)) out += name;
        else out += a.str() + "*" + name;
    };
    for (const auto& [n, c] : terms) put(c, n);
    if (!constant.is_zero() || out.empty()) put(constant, "");
    return out;
}

LinExpr LinExpr::parse(const std::string& text) {
    LinExpr e;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto is_name = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\''; };
    bool first = true;
    for (;;) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw std::invalid_argument("bad linear expression '" + text + "'");
        }
        first = false;
        Rational coef(sign);
        bool have_num = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            coef = coef * Rational::parse(text.substr(i, j - i));
            i = j;
            have_num = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            } else {
                e.constant += coef;
                continue;
            }
        }
        size_t j = i;
        while (j < text.size() && is_name(text[j])) ++j;
        if (j == i) {
            if (have_num) throw std::invalid_argument("bad linear expression '" + text + "'");
            throw std::invalid_argument("bad linear expression '" + text + "'");
        }
        e.terms[text.substr(i, j - i)] += coef;
        i = j;
    }
    for (auto it = e.terms.begin(); it != e.terms.end();) it = it->second.is_zero() ? e.terms.erase(it) : std::next(it);
    return e;
}

LinExpr substitute(const LinExpr& e, const std::map<std::string, LinExpr>& values) {
    LinExpr out;
    out.constant = e.constant;
    for (const auto& [n, c] : e.terms) {
        auto it = values.find(n);
        if (it == values.end()) {
            out.terms[n] += c;
            continue;
        }
        out.constant += c * it->second.constant;
        for (const auto& [m, d] : it->second.terms) out.terms[m] += c * d;
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------- system

const Sym& RelationSystem::sym(const std::string& name) const {
    for (const auto& s : symbols)
        if (s.name == name) return s;
    throw std::invalid_argument("unknown symbol '" + name + "'");
}

bool RelationSystem::has(const std::string& name) const {
    return std::any_of(symbols.begin(), symbols.end(), [&](const Sym& s) { return s.name == name; });
}

void RelationSystem::validate() const {
    std::set<std::string> seen;
    for (const auto& s : symbols) {
        if (!seen.insert(s.name).second) throw std::invalid_argument("duplicate symbol '" + s.name + "'");
    }
    for (const auto& s : symbols) {
        if (s.kind == SymKind::s_successor) {
            if (!has(s.base) || sym(s.base).kind != SymKind::s_member)
                throw std::invalid_argument("successor '" + s.name + "' needs a member as base");
        }
    }
    auto check = [&](const LinForm& f, const std::string& what) {
        for (const auto& [n, c] : f)
            if (!has(n)) throw std::invalid_argument(what + " refers to unknown symbol '" + n + "'");
    };
    for (const auto& r : relations) {
        check(r.coeffs, "relation " + r.label);
        bool nz = std::any_of(r.coeffs.begin(), r.coeffs.end(), [](const auto& kv) { return !kv.second.is_zero(); });
        if (!nz) throw std::invalid_argument("relation " + r.label + " has no nonzero coefficient");
        if (r.eps.sign() < 0) throw std::invalid_argument("relation " + r.label + " has a negative epsilon multiple");
    }
    for (const auto& q : inequalities) check(q.coeffs, "inequality " + q.label);
    for (const auto& d : disequalities) check(d.coeffs, "disequality " + d.label);
}

// ---------------------------------------------------------------- Fourier-Motzkin

namespace {

struct Row {
    std::vector<Rational> c;
    Rational k;
    bool strict;
};

bool normalize(Row& r) {
    for (const auto& x : r.c) {
        if (!x.is_zero()) {
            Rational s = abs(x);
            for (auto& y : r.c) y /= s;
            r.k /= s;
            return true;
        }
    }
    return false;
}

}  // namespace

bool linear_feasible(size_t nvars, std::vector<LinearConstraint> cs) {
    std::vector<Row> rows;
    for (auto& c : cs) {
        if (c.coeffs.size() != nvars) throw std::invalid_argument("constraint has the wrong width");
        rows.push_back({c.coeffs, c.constant, c.strict && !c.equality});
        if (c.equality) {
            Row neg{c.coeffs, -c.constant, false};
            for (auto& x : neg.c) x = -x;
            rows.push_back(neg);
        }
    }
    std::vector<bool> done(nvars, false);
    for (;;) {
        // drop constant rows, dedupe the rest
        std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
        for (auto& r : rows) {
            if (!normalize(r)) {
                bool ok = r.strict ? r.k.sign() > 0 : r.k.sign() >= 0;
                if (!ok) return false;
                continue;
            }
            auto it = best.find(r.c);
            if (it == best.end()) best.emplace(r.c, std::make_pair(r.k, r.strict));
            else if (r.k < it->second.first || (r.k == it->second.first && r.strict)) it->second = {r.k, r.strict};
        }
        rows.clear();
        for (auto& [c, ks] : best) rows.push_back({c, ks.first, ks.second});
        if (rows.empty()) return true;

        size_t pick = nvars;
        long score = 0;
        for (size_t j = 0; j < nvars; ++j) {
            if (done[j]) continue;
            long pos = 0, neg = 0;
            for (auto& r : rows) {
                if (r.c[j].sign() > 0) ++pos;
                if (r.c[j].sign() < 0) ++neg;
            }
            if (pos + neg == 0) continue;
            long s = pos * neg - pos - neg;
            if (pick == nvars || s < score) {
                pick = j;
                score = s;
            }
        }
        if (pick == nvars) return true;
        done[pick] = true;
        std::vector<Row> pos, neg, next;
        for (auto& r : rows) {
            int s = r.c[pick].sign();
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Rational a = p.c[pick], b = -n.c[pick];
                Row r{std::vector<Rational>(nvars), p.k / a + n.k / b, p.strict || n.strict};
                for (size_t j = 0; j < nvars; ++j) r.c[j] = p.c[j] / a + n.c[j] / b;
                r.c[pick] = Rational(0);
                next.push_back(r);
            }
        }
        rows = std::move(next);
    }
}

// ---------------------------------------------------------------- elimination

namespace {

struct Elim {
    const RelationSystem& sys;
    std::vector<std::string> cols;  // column order
    std::map<std::string, size_t> col_of;
    std::vector<std::vector<Rational>> A;  // rows over cols
    std::vector<Rational> b;               // constants
    std::vector<std::vector<Rational>> T;  // combination of input relations
    std::vector<size_t> pivot_col;         // per reduced row
    std::vector<bool> is_pivot;
    std::optional<size_t> bad_row;         // 0 = nonzero constant
    std::map<std::string, LinExpr> values; // symbol -> expression over free symbols

    explicit Elim(const RelationSystem& s) : sys(s) {
        auto add_kind = [&](auto pred) {
            for (const auto& sy : sys.symbols)
                if (pred(sy)) {
                    col_of[sy.name] = cols.size();
                    cols.push_back(sy.name);
                }
        };
        add_kind([](const Sym& s) { return s.kind == SymKind::action; });
        add_kind([](const Sym& s) { return s.kind == SymKind::multiplicity; });
        add_kind([](const Sym& s) { return s.kind == SymKind::s_successor; });
        add_kind([](const Sym& s) { return s.kind == SymKind::s_member; });
        const size_t n = cols.size(), m = sys.relations.size();
        for (size_t i = 0; i < m; ++i) {
            std::vector<Rational> row(n);
            for (const auto& [name, c] : sys.relations[i].coeffs) row[col_of.at(name)] += c;
            A.push_back(row);
            b.push_back(sys.relations[i].constant);
            std::vector<Rational> t(m);
            t[i] = Rational(1);
            T.push_back(t);
        }
        reduce();
    }

    void reduce() {
        const size_t n = cols.size(), m = A.size();
        is_pivot.assign(n, false);
        size_t r = 0;
        for (size_t c = 0; c < n && r < m; ++c) {
            size_t p = r;
            while (p < m && A[p][c].is_zero()) ++p;
            if (p == m) continue;
            std::swap(A[p], A[r]);
            std::swap(b[p], b[r]);
            std::swap(T[p], T[r]);
            Rational inv = Rational(1) / A[r][c];
            for (auto& x : A[r]) x *= inv;
            b[r] *= inv;
            for (auto& x : T[r]) x *= inv;
            for (size_t i = 0; i < m; ++i) {
                if (i == r || A[i][c].is_zero()) continue;
                Rational f = A[i][c];
                for (size_t j = 0; j < n; ++j) A[i][j] -= f * A[r][j];
                b[i] -= f * b[r];
                for (size_t j = 0; j < T[i].size(); ++j) T[i][j] -= f * T[r][j];
            }
            pivot_col.push_back(c);
            is_pivot[c] = true;
            ++r;
        }
        for (size_t i = r; i < m; ++i)
            if (!b[i].is_zero()) {
                bad_row = i;
                break;
            }
        for (size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) values[cols[c]] = LinExpr{{{cols[c], Rational(1)}}, Rational(0)};
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            LinExpr e;
            e.constant = -b[i];
            for (size_t c = 0; c < n; ++c)
                if (!is_pivot[c] && !A[i][c].is_zero()) e.terms[cols[c]] = -A[i][c];
            values[cols[pivot_col[i]]] = e;
        }
    }

    std::vector<std::string> free_symbols() const {
        std::vector<std::string> out;
        for (size_t c = 0; c < cols.size(); ++c)
            if (!is_pivot[c]) out.push_back(cols[c]);
        return out;
    }

    LinExpr eval(const LinForm& f, const Rational& k) const { return substitute(LinExpr{f, k}, values); }

    // Multipliers on input relations expressing f + k (which must vanish identically).
    std::vector<std::pair<size_t, Rational>> combination_for(const LinForm& f) const {
        std::vector<Rational> lam(sys.relations.size());
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            auto it = f.find(cols[pivot_col[i]]);
            if (it == f.end() || it->second.is_zero()) continue;
            for (size_t j = 0; j < lam.size(); ++j) lam[j] += it->second * T[i][j];
        }
        std::vector<std::pair<size_t, Rational>> out;
        for (size_t j = 0; j < lam.size(); ++j)
            if (!lam[j].is_zero()) out.emplace_back(j, lam[j]);
        return out;
    }
};

LinForm form(std::initializer_list<std::pair<std::string, Rational>> l) {
    LinForm f;
    for (const auto& [n, c] : l) f[n] += c;
    for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
    return f;
}

Rational eps_bound(const RelationSystem& sys, const std::vector<std::pair<size_t, Rational>>& comb) {
    Rational c(0);
    for (const auto& [i, l] : comb) c += abs(l) * sys.relations[i].eps;
    return c;
}

Certificate affine_cert(const RelationSystem& sys, const Elim& el, CertKind kind, const LinForm& f, const Rational& k,
                        std::string statement, std::vector<std::string> constraints) {
    Certificate c;
    c.kind = kind;
    c.statement = std::move(statement);
    c.derived = LinExpr{f, k};
    c.combination = el.combination_for(f);
    c.eps_constant = eps_bound(sys, c.combination);
    c.constraints = std::move(constraints);
    return c;
}

// A term that must lie in one of the two S-sets.
struct MemberTerm {
    std::string label;
    LinForm f;
    SSide set;
    bool gt_one;
    std::string base;       // for gaps: the base member
    std::string successor;  // for gaps: the successor
};

std::vector<MemberTerm> member_terms(const RelationSystem& sys) {
    std::vector<MemberTerm> out;
    for (const auto& s : sys.symbols) {
        if (s.kind == SymKind::s_member) out.push_back({s.name, form({{s.name, Rational(1)}}), s.set, s.gt_one, "", ""});
    }
    for (const auto& s : sys.symbols) {
        if (s.kind != SymKind::s_successor) continue;
        const Sym& base = sys.sym(s.base);
        out.push_back({s.name, form({{s.name, Rational(1)}}), base.set, true, "", ""});
        if (!sys.gap_rules) continue;
        out.push_back({s.name + " - " + s.base, form({{s.name, Rational(1)}, {s.base, Rational(-1)}}), opposite(base.set),
                       s.gap_gt_one, s.base, s.name});
    }
    return out;
}

LinForm minus(const LinForm& a, const LinForm& b) {
    LinForm f = a;
    for (const auto& [n, c] : b) f[n] -= c;
    for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
    return f;
}

// Integer tightening of an inequality whose symbols are all integer valued.
Inequality tighten(const RelationSystem& sys, Inequality q) {
    if (q.coeffs.empty()) return q;
    for (const auto& [n, c] : q.coeffs)
        if (!sys.sym(n).is_integer()) return q;
    i128 l = q.constant.den();
    for (const auto& [n, c] : q.coeffs) l = l / gcd128(l, c.den()) * c.den();
    i128 g = 0;
    for (const auto& [n, c] : q.coeffs) g = gcd128(g, static_cast<i128>(c.num()) * (l / c.den()));
    Rational scale = Rational::from128(l, g);
    for (auto& [n, c] : q.coeffs) c *= scale;
    Rational k = q.constant * scale;  // coeffs.x + k > 0 with integer coefficients
    // coeffs.x >= -k (+1 if strict and -k integral) rounded up
    Rational rhs = -k;
    i64 bound = q.strict ? rhs.floor() + 1 : rhs.ceil();
    q.constant = Rational(-bound);
    q.strict = false;
    return q;
}

struct Checker {
    const RelationSystem& sys;
    const Elim& el;
    std::vector<std::string> free;
    std::vector<Inequality> base;  // all inequalities (tightened)

    LinearConstraint to_lc(const LinForm& f, const Rational& k, bool strict, bool eq = false) const {
        LinExpr e = el.eval(f, k);
        LinearConstraint lc;
        lc.coeffs.assign(free.size(), Rational(0));
        for (size_t i = 0; i < free.size(); ++i) {
            auto it = e.terms.find(free[i]);
            if (it != e.terms.end()) lc.coeffs[i] = it->second;
        }
        lc.constant = e.constant;
        lc.strict = strict;
        lc.equality = eq;
        return lc;
    }

    bool feasible(const std::vector<Inequality>& qs, const std::vector<LinearConstraint>& extra = {}) const {
        std::vector<LinearConstraint> cs;
        for (const auto& q : qs) cs.push_back(to_lc(q.coeffs, q.constant, q.strict));
        for (const auto& x : extra) cs.push_back(x);
        return linear_feasible(free.size(), cs);
    }

    // true iff f + k vanishes on the whole feasible region
    bool forced_zero(const LinForm& f, const Rational& k) const {
        LinExpr e = el.eval(f, k);
        if (e.is_zero()) return true;
        LinearConstraint pos = to_lc(f, k, true);
        LinForm nf = f;
        for (auto& [n, c] : nf) c = -c;
        LinearConstraint neg = to_lc(nf, -k, true);
        return !feasible(base, {pos}) && !feasible(base, {neg});
    }
};

}  // namespace

Verdict solve(const RelationSystem& system_in) {
    system_in.validate();
    RelationSystem sys = system_in;
    std::set<std::string> forced_one;  // cross-set equalities already resolved to the value 1

    for (;;) {
        Elim el(sys);
        Verdict v;
        if (el.bad_row) {
            size_t r = *el.bad_row;
            Certificate c;
            c.kind = CertKind::inconsistent;
            c.derived = LinExpr{{}, el.b[r]};
            c.statement = "0 = " + (-el.b[r]).str();
            for (size_t j = 0; j < el.T[r].size(); ++j)
                if (!el.T[r][j].is_zero()) c.combination.emplace_back(j, el.T[r][j]);
            c.eps_constant = eps_bound(sys, c.combination);
            v.certificate = c;
            return v;
        }

        // positive quantities forced to zero
        for (const auto& s : sys.symbols) {
            if (s.kind != SymKind::action && s.kind != SymKind::s_member) continue;
            LinForm f = form({{s.name, Rational(1)}});
            if (el.eval(f, Rational(0)).is_zero()) {
                v.certificate = affine_cert(sys, el, CertKind::zero_quantity, f, Rational(0), s.name + " = 0",
                                            {s.name + (s.kind == SymKind::action ? " is a positive action" : " is a positive integer")});
                return v;
            }
        }
        // successor rules
        for (const auto& s : sys.symbols) {
            if (s.kind != SymKind::s_successor) continue;
            LinForm f = form({{s.name, Rational(1)}, {s.base, Rational(-1)}});
            if (el.eval(f, Rational(0)).is_zero()) {
                v.certificate = affine_cert(sys, el, CertKind::successor_equals_base, f, Rational(0), s.name + " = " + s.base,
                                            {s.name + " is the member after " + s.base});
                return v;
            }
        }
        for (const auto& s : sys.symbols) {
            if (!sys.gap_rules || s.kind != SymKind::s_successor || !sys.sym(s.base).gt_one) continue;
            LinForm f = form({{s.name, Rational(1)}, {s.base, Rational(-2)}});
            if (el.eval(f, Rational(0)).is_zero()) {
                v.certificate = affine_cert(sys, el, CertKind::successor_gap_equals_base, f, Rational(0),
                                            s.name + " - " + s.base + " = " + s.base,
                                            {s.base + " > 1, so the gap after it differs from it"});
                return v;
            }
        }
        // cross-set equalities and stated disequalities on the affine solution set
        std::vector<MemberTerm> terms = member_terms(sys);
        bool restarted = false;
        auto cross_pairs = [&](auto&& is_equal) -> std::optional<Certificate> {
            for (size_t i = 0; i < terms.size(); ++i) {
                for (size_t j = i + 1; j < terms.size(); ++j) {
                    const MemberTerm& u = terms[i];
                    const MemberTerm& w = terms[j];
                    if (u.set == w.set) continue;
                    LinForm d = minus(u.f, w.f);
                    if (d.empty() || !is_equal(d)) continue;
                    if (u.gt_one || w.gt_one) {
                        bool gap_rule = (!u.base.empty() && w.label == u.base) || (!w.base.empty() && u.label == w.base);
                        return affine_cert(sys, el, gap_rule ? CertKind::successor_gap_equals_base : CertKind::cross_set_equality,
                                           d, Rational(0), u.label + " = " + w.label + " with value > 1",
                                           {u.label + " in " + to_string(u.set), w.label + " in " + to_string(w.set),
                                            "the two sets share only 1"});
                    }
                    std::string key = u.label + "=" + w.label;
                    if (forced_one.insert(key).second) {
                        sys.relations.push_back({u.f, Rational(-1), Rational(0), "cross-set equality " + key + " forces value 1"});
                        restarted = true;
                        return std::nullopt;
                    }
                }
            }
            return std::nullopt;
        };
        if (auto c = cross_pairs([&](const LinForm& d) { return el.eval(d, Rational(0)).is_zero(); })) {
            v.certificate = *c;
            return v;
        }
        if (restarted) continue;
        for (const auto& d : sys.disequalities) {
            if (el.eval(d.coeffs, d.constant).is_zero()) {
                v.certificate = affine_cert(sys, el, CertKind::disequality_violated, d.coeffs, d.constant,
                                            LinExpr{d.coeffs, d.constant}.str() + " = 0", {d.label});
                return v;
            }
        }

        // side inequalities
        std::vector<Inequality> structural, positivity, user;
        for (const auto& s : sys.symbols) {
            switch (s.kind) {
                case SymKind::action:
                    positivity.push_back({form({{s.name, Rational(1)}}), Rational(0), true, s.name + " > 0"});
                    break;
                case SymKind::s_member:
                    structural.push_back({form({{s.name, Rational(1)}}), Rational(s.gt_one ? -1 : 0), true,
                                          s.name + (s.gt_one ? " > 1" : " > 0")});
                    break;
                case SymKind::s_successor:
                    structural.push_back({form({{s.name, Rational(1)}, {s.base, Rational(-1)}}), Rational(s.gap_gt_one ? -1 : 0), true,
                                          s.name + " - " + s.base + (s.gap_gt_one ? " > 1" : " > 0")});
                    break;
                case SymKind::multiplicity:
                    structural.push_back({form({{s.name, Rational(1)}}), Rational(0), false, s.name + " >= 0"});
                    break;
            }
        }
        for (const auto& q : sys.inequalities) user.push_back(q);
        Checker ck{sys, el, el.free_symbols(), {}};
        auto tight = [&](std::vector<Inequality> qs) {
            for (auto& q : qs) q = tighten(sys, q);
            return qs;
        };
        structural = tight(structural);
        user = tight(user);
        std::vector<Inequality> all = structural;
        all.insert(all.end(), positivity.begin(), positivity.end());
        all.insert(all.end(), user.begin(), user.end());
        ck.base = all;
        if (!ck.feasible(all)) {
            for (const auto& p : positivity) {
                std::vector<Inequality> qs = structural;
                qs.push_back(p);
                if (!ck.feasible(qs)) {
                    const std::string& name = p.coeffs.begin()->first;
                    LinExpr e = el.eval(p.coeffs, Rational(0));
                    LinForm f = minus(p.coeffs, e.terms);
                    Certificate c = affine_cert(sys, el, CertKind::nonpositive_quantity, f, -e.constant,
                                                name + " = " + e.str() + " cannot be positive", {});
                    for (const auto& q : structural) c.constraints.push_back(q.label);
                    c.constraints.push_back(p.label);
                    v.certificate = c;
                    return v;
                }
            }
            // shrink to a minimal conflicting subset
            std::vector<Inequality> core = all;
            for (size_t i = 0; i < core.size();) {
                std::vector<Inequality> trial = core;
                trial.erase(trial.begin() + static_cast<long>(i));
                if (!ck.feasible(trial)) core = trial;
                else ++i;
            }
            Certificate c;
            c.kind = CertKind::inequality_conflict;
            c.statement = "no point satisfies the inequalities jointly";
            for (const auto& q : core) c.constraints.push_back(q.label);
            v.certificate = c;
            return v;
        }

        // rules that hold only as disequalities, checked on the feasible region
        for (const auto& s : sys.symbols) {
            if (!sys.gap_rules || s.kind != SymKind::s_successor || !sys.sym(s.base).gt_one) continue;
            LinForm f = form({{s.name, Rational(1)}, {s.base, Rational(-2)}});
            if (ck.forced_zero(f, Rational(0))) {
                Certificate c;
                c.kind = CertKind::successor_gap_equals_base;
                c.statement = s.name + " - " + s.base + " = " + s.base + " on every feasible point";
                c.constraints = {s.base + " > 1, so the gap after it differs from it"};
                v.certificate = c;
                return v;
            }
        }
        if (auto c = cross_pairs([&](const LinForm& d) { return ck.forced_zero(d, Rational(0)); })) {
            c->statement += " on every feasible point";
            c->derived.reset();
            c->combination.clear();
            c->eps_constant.reset();
            v.certificate = *c;
            return v;
        }
        if (restarted) continue;
        for (const auto& d : sys.disequalities) {
            if (ck.forced_zero(d.coeffs, d.constant)) {
                Certificate c;
                c.kind = CertKind::disequality_violated;
                c.statement = LinExpr{d.coeffs, d.constant}.str() + " = 0 on every feasible point";
                c.constraints = {d.label};
                v.certificate = c;
                return v;
            }
        }

        // feasible: report the parametric solution
        Solution sol;
        sol.params = ck.free;
        for (const auto& s : sys.symbols) sol.values[s.name] = el.values.at(s.name);
        for (const auto& p : sol.params)
            if (sys.sym(p).kind == SymKind::action) sol.notes.push_back("free action parameter " + p);
        for (const auto& s : sys.symbols) {
            if (!s.is_integer()) continue;
            const LinExpr& e = sol.values[s.name];
            bool fractional = !e.constant.is_integer();
            for (const auto& [n, c] : e.terms) fractional = fractional || !c.is_integer();
            if (!fractional) continue;
            if (e.terms.size() == 1 && e.constant.is_zero()) {
                const auto& [n, c] = *e.terms.begin();
                std::string why = n + (c.den() == 2 ? " even" : " divisible by " + std::to_string(c.den()));
                sol.notes.push_back(why + " (" + s.name + " = " + e.str() + " integral)");
            } else {
                sol.notes.push_back(s.name + " = " + e.str() + " integral");
            }
        }
        v.feasible = true;
        v.solution = sol;
        return v;
    }
}

bool certificate_consistent(const RelationSystem& sys, const Certificate& c) {
    if (!c.derived) return true;
    LinExpr acc;
    for (const auto& [i, l] : c.combination) {
        if (i >= sys.relations.size()) return false;
        for (const auto& [n, x] : sys.relations[i].coeffs) acc.terms[n] += l * x;
        acc.constant += l * sys.relations[i].constant;
    }
    for (auto it = acc.terms.begin(); it != acc.terms.end();) it = it->second.is_zero() ? acc.terms.erase(it) : std::next(it);
    LinExpr want = *c.derived;
    for (auto it = want.terms.begin(); it != want.terms.end();) it = it->second.is_zero() ? want.terms.erase(it) : std::next(it);
    return acc == want;
}

bool solution_consistent(const RelationSystem& sys, const Solution& s) {
    for (const auto& r : sys.relations) {
        if (!substitute(LinExpr{r.coeffs, r.constant}, s.values).is_zero()) return false;
    }
    return true;
}

nlohmann::json to_json(const Verdict& v, const RelationSystem& sys) {
    nlohmann::json j;
    j["feasible"] = v.feasible;
    if (v.certificate) {
        const Certificate& c = *v.certificate;
        nlohmann::json cj{{"kind", to_string(c.kind)}, {"statement", c.statement}, {"constraints", c.constraints}};
        if (c.derived) cj["derived"] = c.derived->str() + " = 0";
        if (c.eps_constant) cj["eps_constant"] = c.eps_constant->str();
        nlohmann::json comb = nlohmann::json::array();
        for (const auto& [i, l] : c.combination) {
            const std::string& lab = sys.relations[i].label;
            comb.push_back({{"relation", lab.empty() ? "#" + std::to_string(i) : lab}, {"multiplier", l.str()}});
        }
        cj["combination"] = comb;
        j["certificate"] = cj;
    }
    if (v.solution) {
        nlohmann::json sj;
        sj["params"] = v.solution->params;
        nlohmann::json vals;
        for (const auto& [n, e] : v.solution->values) vals[n] = e.str();
        sj["values"] = vals;
        sj["notes"] = v.solution->notes;
        j["solution"] = sj;
    }
    return j;
}

}  // namespace ech::feas
