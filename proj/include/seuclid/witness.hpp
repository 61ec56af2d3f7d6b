#pragma once

#include "seuclid/covering.hpp"
#include "seuclid/exact/number_theory.hpp"
#include "seuclid/field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace seuclid {

/// Which branch of the lower-bound argument applies to (d, p).
enum class WitnessCase {
    OddInert23,        ///< p odd, (-d/p) = -1, -d = 2,3 mod 4
    OddRamified23,     ///< p odd, p | d, -d = 2,3 mod 4
    OddInert1mod4,     ///< p odd, (-d/p) = -1, -d = 1 mod 4
    OddRamified1mod4,  ///< p odd, p | d, -d = 1 mod 4
    TwoGeneric,        ///< p = 2, -d = 2,3 mod 4
    TwoEvenD,          ///< p = 2, -d = 2,3 mod 4, d even
    TwoInert5mod8,     ///< p = 2, -d = 5 mod 8
    ThirteenSpecial,   ///< p = 2, d = 13, witness w/3
};

inline const char* to_string(WitnessCase c) {
    switch (c) {
        case WitnessCase::OddInert23: return "OddInert23";
        case WitnessCase::OddRamified23: return "OddRamified23";
        case WitnessCase::OddInert1mod4: return "OddInert1mod4";
        case WitnessCase::OddRamified1mod4: return "OddRamified1mod4";
        case WitnessCase::TwoGeneric: return "TwoGeneric";
        case WitnessCase::TwoEvenD: return "TwoEvenD";
        case WitnessCase::TwoInert5mod8: return "TwoInert5mod8";
        case WitnessCase::ThirteenSpecial: return "ThirteenSpecial";
    }
    return "?";
}

inline std::optional<WitnessCase> witness_case_from_string(const std::string& s) {
    for (auto c : {WitnessCase::OddInert23, WitnessCase::OddRamified23, WitnessCase::OddInert1mod4,
                   WitnessCase::OddRamified1mod4, WitnessCase::TwoGeneric, WitnessCase::TwoEvenD,
                   WitnessCase::TwoInert5mod8, WitnessCase::ThirteenSpecial}) {
        if (s == to_string(c)) return c;
    }
    return std::nullopt;
}

/// Witness point plus the proven lower bound on N_S(xi0 - alpha) over all alpha in O_S.
struct WitnessCertificate {
    BigInt d;
    long long p = 0;
    KElement xi0;
    WitnessCase case_tag = WitnessCase::OddInert23;
    Rational bound;
    bool threshold_ok = false;
};

/// (d, p) lies outside the hypotheses of the lower-bound argument (p splits).
struct NotApplicable {
    std::string reason;
};

using WitnessResult = std::variant<WitnessCertificate, NotApplicable, Inconclusive>;

/// The branch, witness point and lower bound for (d, p), whether or not the bound reaches 1.
/// Returns nullopt exactly when p splits in Q(sqrt(-d)).
inline std::optional<WitnessCertificate> witness_analysis(const QuadField& field, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("witness: " + std::to_string(p) + " is not prime");
    const BigInt& d = field.d();
    const Rational dq(d);
    auto minimum = [](const Rational& x, const Rational& y) { return x < y ? x : y; };
    WitnessCertificate w{d, p, KElement::zero(field), WitnessCase::OddInert23, Rational(0), false};

    if (p != 2) {
        const int symbol = legendre(-d, p);
        if (symbol == 1) return std::nullopt;
        const Rational pq(p);
        w.xi0 = KElement(field, 1, 1, 2);
        if (!field.half_integer()) {
            // N(alpha - xi0) = p^2m (A^2 + d B^2) / (4 p^2n)
            const Rational base = (Rational(1) + dq) / Rational(4);
            if (symbol == -1) {
                w.case_tag = WitnessCase::OddInert23;
                w.bound = base;
            } else {
                w.case_tag = WitnessCase::OddRamified23;
                w.bound = minimum(base, (pq * pq + dq) / (Rational(4) * pq));
            }
        } else {
            // N(alpha - xi0) = p^2m ((2A + B)^2 + d B^2) / (16 p^2n)
            const Rational base = (Rational(1) + dq) / Rational(16);
            if (symbol == -1) {
                w.case_tag = WitnessCase::OddInert1mod4;
                w.bound = base;
            } else {
                w.case_tag = WitnessCase::OddRamified1mod4;
                w.bound = minimum(base, (pq * pq + dq) / (Rational(16) * pq));
            }
        }
    } else {
        if (mod(-d, BigInt(8)) == 1) return std::nullopt;
        w.xi0 = KElement(field, 1, 1, 3);
        if (!field.half_integer()) {
            if (d == 13) {
                // A = 3a/2^m is an odd multiple of 3 when 2 | A^2 + 13 B^2
                w.case_tag = WitnessCase::ThirteenSpecial;
                w.xi0 = KElement(field, 0, 1, 3);
                w.bound = minimum(Rational(BigInt(13), BigInt(9)), Rational(BigInt(9 + 13), BigInt(18)));
            } else if (d % 2 == 0) {
                w.case_tag = WitnessCase::TwoEvenD;
                w.bound = (Rational(4) + dq) / Rational(18);
            } else {
                w.case_tag = WitnessCase::TwoGeneric;
                w.bound = (Rational(1) + dq) / Rational(18);
            }
        } else {
            w.case_tag = WitnessCase::TwoInert5mod8;
            w.bound = (Rational(1) + dq) / Rational(36);
        }
    }
    w.threshold_ok = w.bound >= Rational(1);
    return w;
}

/// Negative certificate for S = {p}: a witness xi0 with N_S(xi0 - alpha) >= 1 for every
/// alpha in O_S, when the lower bound reaches 1.
inline WitnessResult certify_non_euclidean(const QuadField& field, long long p) {
    auto w = witness_analysis(field, p);
    if (!w) return NotApplicable{std::to_string(p) + " splits in Q(sqrt(-" + field.d().str() + "))"};
    if (!w->threshold_ok)
        return Inconclusive{std::string("lower bound ") + w->bound.str() + " from case " + to_string(w->case_tag) +
                            " is below 1"};
    return *w;
}

/// Re-derives the case analysis for a stored witness and checks it matches.
inline bool verify_witness(const WitnessCertificate& cert, std::string* why = nullptr) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    QuadField field(cert.d);
    auto w = witness_analysis(field, cert.p);
    if (!w) return fail("p splits; no witness argument applies");
    if (w->case_tag != cert.case_tag) return fail(std::string("case should be ") + to_string(w->case_tag));
    if (!(w->xi0 == cert.xi0)) return fail("witness point should be " + w->xi0.str());
    if (w->bound != cert.bound) return fail("bound should be " + w->bound.str());
    if (!w->threshold_ok) return fail("bound " + w->bound.str() + " is below 1");
    return true;
}

/// Result of the exhaustive search of N_S(xi0 - alpha) over alpha = (a + b w)/p^n with
/// n <= n_max and |a|, |b| <= coeff_max.
struct OracleReport {
    Rational min_snorm;
    KElement argmin;
    long long n_max = 0;
    long long coeff_max = 0;
};

inline OracleReport oracle_min_snorm(const QuadField& field, long long p, const KElement& xi0, long long n_max,
                                     long long coeff_max) {
    if (n_max < 0 || coeff_max < 1) throw std::invalid_argument("oracle: bounds must be positive");
    const SSet s{p};
    std::optional<Rational> best;
    std::optional<KElement> where;
    BigInt c = 1;
    for (long long n = 0; n <= n_max; ++n, c *= p) {
        const BigInt zc = xi0.c() * c;
        const BigInt den = zc * zc;
        for (long long a = -coeff_max; a <= coeff_max; ++a) {
            const BigInt u = xi0.a() * c - BigInt(a) * xi0.c();
            for (long long b = -coeff_max; b <= coeff_max; ++b) {
                const BigInt v = xi0.b() * c - BigInt(b) * xi0.c();
                if (u == 0 && v == 0) continue;  // alpha = xi0
                Rational value = s_norm_rational(Rational(field.norm_form(u, v), den), s);
                if (!best || value < *best) {
                    best = value;
                    where = KElement(field, BigInt(a), BigInt(b), c);
                }
            }
        }
    }
    return OracleReport{*best, *where, n_max, coeff_max};
}

}  // namespace seuclid
