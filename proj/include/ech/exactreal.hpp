#pragma once

#include <compare>
#include <optional>
#include <string>

#include "ech/rational.hpp"

namespace ech {

// Integer form (a + b*sqrt(d))/c of an element of Q(sqrt d).
struct SurdForm {
    i64 a = 0;
    i64 b = 0;
    i64 d = 0;
    i64 c = 1;
};

// An element r + s*sqrt(d) of a real quadratic field, or a rational when s = 0.
// Canonical: d is squarefree and > 1 whenever s != 0, and d = 0 when s = 0.
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(Rational r) : r_(r) {}  // NOLINT
    ExactReal(i64 n) : r_(n) {}       // NOLINT
    // r + s*sqrt(n) for any n >= 0; square factors of n are pulled out.
    static ExactReal with_sqrt(Rational r, Rational s, i64 n);
    // (a + b*sqrt(d))/c
    static ExactReal surd(i64 a, i64 b, i64 d, i64 c) {
        return with_sqrt(Rational(a, c), Rational(b, c), d);
    }
    static ExactReal sqrt_of(Rational v);

    static ExactReal parse(const std::string& text);

    bool is_irrational() const { return !s_.is_zero(); }
    bool is_rational() const { return s_.is_zero(); }
    const Rational& rational_part() const { return r_; }
    const Rational& surd_coeff() const { return s_; }
    i64 radicand() const { return d_; }
    // only valid for rational values
    Rational as_rational() const;
    SurdForm surd_form() const;
    int sign() const;

    i64 floor() const;
    i64 ceil() const;
    long double approx() const;
    std::string str() const;

    ExactReal operator-() const;
    friend ExactReal operator+(const ExactReal& x, const ExactReal& y);
    friend ExactReal operator-(const ExactReal& x, const ExactReal& y) { return x + (-y); }
    friend ExactReal operator*(const ExactReal& x, const ExactReal& y);
    friend ExactReal operator/(const ExactReal& x, const ExactReal& y);
    ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
    ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }

    friend bool operator==(const ExactReal& x, const ExactReal& y) = default;
    friend std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rational r_;
    Rational s_;
    i64 d_ = 0;
};

// Sign of A + B*sqrt(d) for integers, d > 1 squarefree (or d = 0).
int sign_int_surd(i128 A, i128 B, i64 d);

i64 floor_mul(i64 q, const ExactReal& theta);
i64 ceil_mul(i64 q, const ExactReal& theta);
// three-way comparison of ceil(q*theta)/q against ceil(q2*theta)/q2
std::strong_ordering cmp_ceil_fractions(i64 q, i64 q2, const ExactReal& theta);

}  // namespace ech
