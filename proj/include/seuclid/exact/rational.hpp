#pragma once

#include "seuclid/exact/bigint.hpp"

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace seuclid {

/// Exact rational number kept in canonical form: den > 0 and gcd(|num|, den) = 1.
/// Because the form is canonical, equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(long long n) : num_(n), den_(1) {}      // NOLINT(implicit)
    Rational(int n) : num_(n), den_(1) {}            // NOLINT(implicit)
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    BigInt floor() const { return floor_div(num_, den_); }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        return lhs == rhs ? std::strong_ordering::equal
             : lhs < rhs  ? std::strong_ordering::less
                          : std::strong_ordering::greater;
    }

    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    struct raw_tag {};
    Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

/// Parses "n" or "n/d".
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

}  // namespace seuclid
