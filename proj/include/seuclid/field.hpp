#pragma once

#include "seuclid/exact/bigint.hpp"
#include "seuclid/exact/number_theory.hpp"
#include "seuclid/exact/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace seuclid {

enum class BasisKind {
    Integer,      ///< w = sqrt(-d), when -d = 2, 3 (mod 4)
    HalfInteger,  ///< w = (1 + sqrt(-d))/2, when -d = 1 (mod 4)
};

/// The complex quadratic field Q(sqrt(-d)) together with its integral basis {1, w}.
class QuadField {
public:
    explicit QuadField(const BigInt& d) : d_(d) {
        if (d < 1) throw std::invalid_argument("QuadField: d must be positive");
        if (!squarefree(d)) throw std::invalid_argument("QuadField: d = " + d.str() + " is not squarefree");
        if (mod(-d, BigInt(4)) == 1) {
            kind_ = BasisKind::HalfInteger;
            D_ = d;
        } else {
            kind_ = BasisKind::Integer;
            D_ = 4 * d;
        }
    }

    const BigInt& d() const { return d_; }
    /// Absolute value of the discriminant.
    const BigInt& D() const { return D_; }
    BasisKind basis_kind() const { return kind_; }
    bool half_integer() const { return kind_ == BasisKind::HalfInteger; }

    /// N(u + v w) for rational basis coordinates u, v.
    Rational norm_form(const Rational& u, const Rational& v) const {
        if (half_integer()) return u * u + u * v + Rational((d_ + 1) / 4) * v * v;
        return u * u + Rational(d_) * v * v;
    }

    /// Integer-valued form for integer coordinates.
    BigInt norm_form(const BigInt& u, const BigInt& v) const {
        if (half_integer()) return u * u + u * v + ((d_ + 1) / 4) * v * v;
        return u * u + d_ * v * v;
    }

    friend bool operator==(const QuadField& a, const QuadField& b) { return a.d_ == b.d_; }

private:
    BigInt d_;
    BigInt D_;
    BasisKind kind_ = BasisKind::Integer;
};

inline QuadField make_field(const BigInt& d) { return QuadField(d); }

/// The element (a + b w)/c of K, kept with c > 0 and gcd(a, b, c) = 1.
class KElement {
public:
    KElement(QuadField field, BigInt a, BigInt b, BigInt c = 1)
        : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (c_ == 0) throw std::domain_error("KElement: zero denominator");
        if (c_ < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
        BigInt g = gcd(gcd(a_, b_), c_);
        if (g > 1) {
            a_ /= g;
            b_ /= g;
            c_ /= g;
        }
    }

    /// Builds u + v w from rational basis coordinates.
    static KElement from_coords(const QuadField& field, const Rational& u, const Rational& v) {
        BigInt c = u.den() / gcd(u.den(), v.den()) * v.den();
        return KElement(field, u.num() * (c / u.den()), v.num() * (c / v.den()), c);
    }

    static KElement zero(const QuadField& field) { return KElement(field, 0, 0, 1); }

    const QuadField& field() const { return field_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }

    Rational u() const { return Rational(a_, c_); }
    Rational v() const { return Rational(b_, c_); }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integral() const { return c_ == 1; }

    friend KElement operator+(const KElement& x, const KElement& y) {
        check_same(x, y);
        return KElement(x.field_, x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_);
    }
    friend KElement operator-(const KElement& x, const KElement& y) {
        check_same(x, y);
        return KElement(x.field_, x.a_ * y.c_ - y.a_ * x.c_, x.b_ * y.c_ - y.b_ * x.c_, x.c_ * y.c_);
    }
    KElement operator-() const { return KElement(field_, -a_, -b_, c_); }

    /// Product, using w^2 = -d or w^2 = w - (1+d)/4.
    friend KElement operator*(const KElement& x, const KElement& y) {
        check_same(x, y);
        const BigInt& d = x.field_.d();
        BigInt bb = x.b_ * y.b_;
        BigInt cross = x.a_ * y.b_ + y.a_ * x.b_;
        if (x.field_.half_integer())
            return KElement(x.field_, x.a_ * y.a_ - ((d + 1) / 4) * bb, cross + bb, x.c_ * y.c_);
        return KElement(x.field_, x.a_ * y.a_ - d * bb, cross, x.c_ * y.c_);
    }

    friend bool operator==(const KElement& x, const KElement& y) {
        return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

    std::string str() const {
        std::string num;
        if (b_ == 0) {
            num = a_.str();
        } else {
            std::string wpart = (abs(b_) == 1 ? std::string() : abs(b_).str()) + "w";
            if (a_ == 0) num = (b_ < 0 ? "-" : "") + wpart;
            else num = a_.str() + (b_ < 0 ? "-" : "+") + wpart;
        }
        if (c_ == 1) return num;
        bool compound = b_ != 0 && a_ != 0;
        return (compound ? "(" + num + ")" : num) + "/" + c_.str();
    }

private:
    static void check_same(const KElement& x, const KElement& y) {
        if (!(x.field_ == y.field_)) throw std::invalid_argument("KElement: elements of different fields");
    }

    QuadField field_;
    BigInt a_;
    BigInt b_;
    BigInt c_;
};

/// Exact field norm N(x) = x * conj(x).
inline Rational norm(const KElement& x) {
    return Rational(x.field().norm_form(x.a(), x.b()), x.c() * x.c());
}

/// N_S(x): the norm with all primes of S deleted from numerator and denominator.
inline Rational s_norm(const KElement& x, const SSet& s) { return s_norm_rational(norm(x), s); }

/// Writes x = x' + gamma with gamma in O and x' in the closed fundamental domain
/// {u + v w : 0 <= u, v <= 1}. Coordinates already in [0, 1] are left alone.
inline std::pair<KElement, KElement> reduce_to_fundamental(const KElement& x) {
    auto shift = [&](const BigInt& coord) -> BigInt {
        if (coord >= 0 && coord <= x.c()) return 0;
        return floor_div(coord, x.c());
    };
    BigInt ga = shift(x.a()), gb = shift(x.b());
    KElement gamma(x.field(), ga, gb, 1);
    KElement reduced(x.field(), x.a() - ga * x.c(), x.b() - gb * x.c(), x.c());
    return {reduced, gamma};
}

/// denom_S(x): the minimal S-smooth c with x = (a + b w)/c; x must lie in O_S.
inline BigInt denom_s(const KElement& x, const SSet& s) {
    if (!is_s_smooth(x.c(), s))
        throw std::domain_error("denom_s: " + x.str() + " is not an S-integer for S = " + s.str());
    return x.c();
}

inline bool in_o_s(const KElement& x, const SSet& s) { return is_s_smooth(x.c(), s); }

}  // namespace seuclid
