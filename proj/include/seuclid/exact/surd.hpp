#pragma once

#include "seuclid/exact/bigint.hpp"
#include "seuclid/exact/number_theory.hpp"
#include "seuclid/exact/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace seuclid {

namespace detail {

/// Sign of s1*sqrt(m1) + s2*sqrt(m2), with m1, m2 >= 0 and s1, s2 in {-1, 0, 1}.
/// Squares only once both terms are known to have opposite signs.
template <class T>
int sign_of_root_sum(int s1, const T& m1, int s2, const T& m2) {
    if (m1 == 0) s1 = 0;
    if (m2 == 0) s2 = 0;
    if (s1 == 0) return s2;
    if (s2 == 0 || s1 == s2) return s1;
    // opposite signs: the larger magnitude wins
    if (m1 == m2) return 0;
    return m1 > m2 ? s1 : s2;
}

inline int sgn(const Rational& q) { return q.sign(); }

/// Sign of a + b*sqrt(m) for rational a, b and integer m >= 0.
inline int sign_surd(const Rational& a, const Rational& b, const BigInt& m) {
    return sign_of_root_sum(sgn(a), a * a, sgn(b), b * b * Rational(m));
}

}  // namespace detail

/// The exact real number (j + s*sqrt(3/D)) / k with s in {-1, 0, 1}.
/// These are the endpoints of the strip projections used by the covering engine.
struct SurdValue {
    BigInt j;
    int s = 0;
    BigInt k = 1;
    BigInt D = 3;

    SurdValue() = default;
    SurdValue(BigInt j_, int s_, BigInt k_, BigInt D_)
        : j(std::move(j_)), s(s_), k(std::move(k_)), D(std::move(D_)) {
        if (s < -1 || s > 1) throw std::invalid_argument("SurdValue: s must be -1, 0 or 1");
        if (k < 1) throw std::invalid_argument("SurdValue: k must be positive");
        if (D < 3) throw std::invalid_argument("SurdValue: D must be at least 3");
    }

    friend bool operator==(const SurdValue&, const SurdValue&) = default;

    std::string str() const {
        std::string body = j.str();
        if (s != 0) body += (s > 0 ? "+" : "-") + std::string("sqrt(3/") + D.str() + ")";
        return "(" + body + ")/" + k.str();
    }
};

/// Exact ordering of two surd values sharing D, by integer arithmetic alone.
///
/// x - y has the sign of P + Q*sqrt(3/D) with P = jx*ky - jy*kx, Q = sx*ky - sy*kx,
/// i.e. the sign of P*sqrt(D) + Q*sqrt(3); the tie-breaking comparison is D*P^2 vs 3*Q^2.
inline std::strong_ordering surd_cmp(const SurdValue& x, const SurdValue& y) {
    if (x.D != y.D) throw std::invalid_argument("surd_cmp: mismatched D");
    BigInt p = x.j * y.k - y.j * x.k;
    BigInt q = BigInt(x.s) * y.k - BigInt(y.s) * x.k;
    int sp = p.sign(), sq = q.sign();
    if (sp == 0 && sq == 0) return std::strong_ordering::equal;
    if (sq == 0 || sp == sq) return to_ordering(sp != 0 ? sp : sq);
    if (sp == 0) return to_ordering(sq);
    BigInt lhs = x.D * p * p;
    BigInt rhs = 3 * q * q;
    if (lhs == rhs) return std::strong_ordering::equal;
    return to_ordering(lhs > rhs ? sp : sq);
}

inline bool surd_less(const SurdValue& x, const SurdValue& y) { return surd_cmp(x, y) < 0; }

/// A real quadratic surd p + q*sqrt(m) with rational p, q and squarefree m >= 1
/// (m = 1 is folded into p, so q = 0 whenever m = 1).
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(Rational p) : p_(std::move(p)) {}  // NOLINT(implicit)
    QuadraticSurd(Rational p, Rational q, const BigInt& radicand) : p_(std::move(p)) {
        if (radicand < 0) throw std::domain_error("QuadraticSurd: negative radicand");
        if (radicand == 0 || q.is_zero()) return;
        auto [f, m] = square_split(radicand);
        if (m == 1) {
            p_ += q * Rational(f);
        } else {
            q_ = q * Rational(f);
            m_ = m;
        }
    }

    /// sqrt(r) for a rational r >= 0.
    static QuadraticSurd sqrt_of(const Rational& r) {
        if (r.sign() < 0) throw std::domain_error("QuadraticSurd: sqrt of negative");
        // sqrt(n/d) = sqrt(n*d)/d
        return QuadraticSurd(Rational(0), Rational(BigInt(1), r.den()), r.num() * r.den());
    }

    static QuadraticSurd from(const SurdValue& v) {
        // (j + s*sqrt(3/D))/k = j/k + s/(k*D) * sqrt(3*D)
        return QuadraticSurd(Rational(v.j, v.k), Rational(BigInt(v.s), v.k * v.D), 3 * v.D);
    }

    const Rational& rational_part() const { return p_; }
    const Rational& surd_part() const { return q_; }
    const BigInt& radicand() const { return m_; }
    bool is_rational() const { return q_.is_zero(); }

    int sign() const { return detail::sign_surd(p_, q_, m_); }

    QuadraticSurd operator-() const { return QuadraticSurd(-p_, -q_, m_, raw_tag{}); }

    /// Sum of surds; radicands must agree unless one side is rational.
    friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
        if (a.is_rational()) return QuadraticSurd(a.p_ + b.p_, b.q_, b.m_, raw_tag{});
        if (b.is_rational()) return QuadraticSurd(a.p_ + b.p_, a.q_, a.m_, raw_tag{});
        if (a.m_ != b.m_) throw std::invalid_argument("QuadraticSurd: mixed radicands in sum");
        Rational q = a.q_ + b.q_;
        return q.is_zero() ? QuadraticSurd(a.p_ + b.p_) : QuadraticSurd(a.p_ + b.p_, q, a.m_, raw_tag{});
    }
    friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }
    friend QuadraticSurd operator*(const Rational& c, const QuadraticSurd& a) {
        if (c.is_zero()) return QuadraticSurd();
        return QuadraticSurd(c * a.p_, c * a.q_, a.m_, raw_tag{});
    }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
        return to_ordering(compare(a, b));
    }

    std::string str() const {
        if (is_rational()) return p_.str();
        return p_.str() + (q_.sign() > 0 ? " + " : " - ") + abs(q_).str() + "*sqrt(" + m_.str() + ")";
    }

private:
    struct raw_tag {};
    QuadraticSurd(Rational p, Rational q, BigInt m, raw_tag)
        : p_(std::move(p)), q_(std::move(q)), m_(std::move(m)) {}

    /// Sign of a - b, also when the radicands differ.
    static int compare(const QuadraticSurd& a, const QuadraticSurd& b) {
        if (a.m_ == b.m_ || a.is_rational() || b.is_rational()) return (a - b).sign();
        // (pa - pb) + qa*sqrt(ma) - qb*sqrt(mb): X + Y with X = c + qa*sqrt(ma), Y = -qb*sqrt(mb)
        Rational c = a.p_ - b.p_;
        int sx = detail::sign_surd(c, a.q_, a.m_);
        int sy = -b.q_.sign();
        if (sx == 0) return sy;
        if (sy == 0 || sx == sy) return sx;
        // |X| vs |Y|: X^2 - Y^2 = c^2 + qa^2 ma - qb^2 mb + 2 c qa sqrt(ma)
        Rational rat = c * c + a.q_ * a.q_ * Rational(a.m_) - b.q_ * b.q_ * Rational(b.m_);
        int diff = detail::sign_surd(rat, Rational(2) * c * a.q_, a.m_);
        return diff == 0 ? 0 : (diff > 0 ? sx : sy);
    }

    Rational p_;
    Rational q_;
    BigInt m_ = 1;
};

}  // namespace seuclid
