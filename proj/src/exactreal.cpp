#include "ech/exactreal.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace ech {

namespace {

i128 mul_checked(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in surd comparison");
    return r;
}

i128 lcm128(i128 a, i128 b) { return a / gcd128(a, b) * b; }

// floor((A + B*sqrt(d))/c), c > 0
i128 floor_int_form(i128 A, i128 B, i64 d, i128 c) {
    if (B == 0 || d == 0) return floor_div(A, c);
    long double est = (static_cast<long double>(A) + static_cast<long double>(B) * std::sqrt(static_cast<long double>(d))) /
                      static_cast<long double>(c);
    i128 n = static_cast<i128>(std::floor(est));
    while (sign_int_surd(A - mul_checked(c, n), B, d) < 0) --n;
    while (sign_int_surd(A - mul_checked(c, n + 1), B, d) >= 0) ++n;
    return n;
}

// n = k^2 * m with m squarefree
void split_square(i64 n, i64& k, i64& m) {
    k = 1;
    m = 1;
    for (i64 p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            k *= p;
            n /= p * p;
        }
        if (n % p == 0) {
            m *= p;
            n /= p;
        }
    }
    m *= n;
}

}  // namespace

int sign_int_surd(i128 A, i128 B, i64 d) {
    if (B == 0 || d == 0) return (A > 0) - (A < 0);
    if (A >= 0 && B > 0) return 1;
    if (A <= 0 && B < 0) return -1;
    i128 a2 = mul_checked(A, A);
    i128 b2 = mul_checked(mul_checked(B, B), d);
    // here A and B have opposite signs (or A == 0)
    if (A > 0) return a2 > b2 ? 1 : (a2 < b2 ? -1 : 0);
    return b2 > a2 ? 1 : (b2 < a2 ? -1 : 0);
}

ExactReal ExactReal::with_sqrt(Rational r, Rational s, i64 n) {
    if (n < 0) throw std::domain_error("square root of a negative number");
    ExactReal x;
    x.r_ = r;
    if (s.is_zero() || n == 0) return x;
    i64 k, m;
    split_square(n, k, m);
    if (m == 1) {
        x.r_ = r + s * Rational(k);
        return x;
    }
    x.s_ = s * Rational(k);
    x.d_ = m;
    return x;
}

ExactReal ExactReal::sqrt_of(Rational v) {
    if (v.sign() < 0) throw std::domain_error("square root of a negative number");
    // sqrt(p/q) = sqrt(p*q)/q
    return with_sqrt(Rational(0), Rational(1, v.den()), narrow(static_cast<i128>(v.num()) * v.den()));
}

Rational ExactReal::as_rational() const {
    if (is_irrational()) throw std::domain_error("value is irrational");
    return r_;
}

SurdForm ExactReal::surd_form() const {
    SurdForm f;
    i128 c = lcm128(r_.den(), s_.den());
    f.c = narrow(c);
    f.a = narrow(static_cast<i128>(r_.num()) * (c / r_.den()));
    f.b = narrow(static_cast<i128>(s_.num()) * (c / s_.den()));
    f.d = d_;
    return f;
}

int ExactReal::sign() const {
    if (is_rational()) return r_.sign();
    SurdForm f = surd_form();
    return sign_int_surd(f.a, f.b, f.d);
}

i64 ExactReal::floor() const {
    SurdForm f = surd_form();
    return narrow(floor_int_form(f.a, f.b, f.d, f.c));
}

i64 ExactReal::ceil() const { return -(-*this).floor(); }

long double ExactReal::approx() const {
    long double v = static_cast<long double>(r_.num()) / r_.den();
    if (is_irrational()) v += static_cast<long double>(s_.num()) / s_.den() * std::sqrt(static_cast<long double>(d_));
    return v;
}

std::string ExactReal::str() const {
    if (is_rational()) return r_.str();
    SurdForm f = surd_form();
    std::string s = "(" + std::to_string(f.a) + (f.b < 0 ? "-" : "+") + std::to_string(f.b < 0 ? -f.b : f.b) +
                    "*sqrt(" + std::to_string(f.d) + "))";
    if (f.c != 1) s += "/" + std::to_string(f.c);
    return s;
}

ExactReal ExactReal::operator-() const {
    ExactReal x = *this;
    x.r_ = -r_;
    x.s_ = -s_;
    return x;
}

static i64 common_radicand(const ExactReal& x, const ExactReal& y) {
    if (x.is_irrational() && y.is_irrational() && x.radicand() != y.radicand())
        throw std::domain_error("values lie in different quadratic fields");
    return x.is_irrational() ? x.radicand() : y.radicand();
}

ExactReal operator+(const ExactReal& x, const ExactReal& y) {
    i64 d = common_radicand(x, y);
    return ExactReal::with_sqrt(x.r_ + y.r_, x.s_ + y.s_, d == 0 ? 1 : d);
}

ExactReal operator*(const ExactReal& x, const ExactReal& y) {
    i64 d = common_radicand(x, y);
    Rational dd(d);
    Rational r = x.r_ * y.r_ + x.s_ * y.s_ * dd;
    Rational s = x.r_ * y.s_ + x.s_ * y.r_;
    return ExactReal::with_sqrt(r, s, d == 0 ? 1 : d);
}

ExactReal operator/(const ExactReal& x, const ExactReal& y) {
    if (y.sign() == 0) throw std::domain_error("division by zero");
    if (y.is_rational()) return x * ExactReal(Rational(1) / y.r_);
    // multiply by the conjugate
    ExactReal conj = y;
    conj.s_ = -y.s_;
    Rational norm = y.r_ * y.r_ - y.s_ * y.s_ * Rational(y.d_);
    return (x * conj) * ExactReal(Rational(1) / norm);
}

i64 floor_mul(i64 q, const ExactReal& theta) {
    SurdForm f = theta.surd_form();
    return narrow(floor_int_form(mul_checked(q, f.a), mul_checked(q, f.b), f.d, f.c));
}

i64 ceil_mul(i64 q, const ExactReal& theta) { return -floor_mul(q, -theta); }

std::strong_ordering cmp_ceil_fractions(i64 q, i64 q2, const ExactReal& theta) {
    i128 l = mul_checked(ceil_mul(q, theta), q2);
    i128 r = mul_checked(ceil_mul(q2, theta), q);
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---- parser ----

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExactReal run() {
        ExactReal v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("cannot parse '" + s_ + "': " + why + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    ExactReal expr() {
        ExactReal v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    ExactReal term() {
        ExactReal v = unary();
        for (;;) {
            if (eat('*')) v = v * unary();
            else if (eat('/')) v = v / unary();
            else return v;
        }
    }
    ExactReal unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return primary();
    }
    ExactReal primary() {
        skip();
        if (eat('(')) {
            ExactReal v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            ExactReal v = expr();
            if (!eat(')')) fail("expected ')'");
            if (v.is_irrational()) fail("sqrt argument must be rational");
            return ExactReal::sqrt_of(v.as_rational());
        }
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        try {
            return ExactReal(static_cast<i64>(std::stoll(s_.substr(start, pos_ - start))));
        } catch (const std::out_of_range&) {
            fail("integer too large");
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

ExactReal ExactReal::parse(const std::string& text) { return Parser(text).run(); }

}  // namespace ech
