#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ech {

using i64 = std::int64_t;
using i128 = __int128;

// Narrow a 128-bit intermediate back to 64 bits; exact or throws.
inline i64 narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in exact arithmetic");
    return static_cast<i64>(v);
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(a/b) for b > 0
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// Reduced fraction over 64-bit integers; every operation is exact and throws on overflow.
class Rational {
public:
    Rational() = default;
    Rational(i64 n) : num_(n), den_(1) {}  // NOLINT implicit by design
    Rational(i64 n, i64 d) { set(n, d); }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    i64 floor() const { return narrow(floor_div(num_, den_)); }
    i64 ceil() const { return narrow(ceil_div(num_, den_)); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return from128(-static_cast<i128>(num_), den_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return from128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "n" or "n/d" with optional sign.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                i64 n = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return Rational(n);
            }
            std::string a = s.substr(0, slash), b = s.substr(slash + 1);
            i64 n = std::stoll(a, &used);
            if (used != a.size()) throw std::invalid_argument(s);
            i64 d = std::stoll(b, &used);
            if (used != b.size()) throw std::invalid_argument(s);
            return Rational(n, d);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }

private:
    void set(i64 n, i64 d) { *this = from128(n, d); }
    i64 num_ = 0;
    i64 den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ech
