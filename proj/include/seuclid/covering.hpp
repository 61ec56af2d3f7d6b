#pragma once

#include "seuclid/exact/number_theory.hpp"
#include "seuclid/exact/surd.hpp"
#include "seuclid/field.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace seuclid {

/// Projection ((j - sqrt(3/D))/k, (j + sqrt(3/D))/k) of the strip of radius-1/k disks
/// centred at (i + j w)/k. The interval is open.
struct Interval {
    SurdValue lo;
    SurdValue hi;
    BigInt j;
    BigInt k;

    Interval(BigInt j_, BigInt k_, const BigInt& D)
        : lo(j_, -1, k_, D), hi(j_, 1, k_, D), j(std::move(j_)), k(std::move(k_)) {}

    bool contains(const SurdValue& y) const { return surd_less(lo, y) && surd_less(y, hi); }
};

inline bool interval_order(const Interval& x, const Interval& y) {
    auto c = surd_cmp(x.lo, y.lo);
    if (c != 0) return c < 0;
    return surd_less(x.hi, y.hi);
}

inline SurdValue surd_integer(long long n, const BigInt& D) { return SurdValue(BigInt(n), 0, 1, D); }

/// Intervals for a single denominator k, i.e. 0 <= j <= k with gcd(j, k) = 1.
inline std::vector<Interval> intervals_for_k(const BigInt& k, const BigInt& D) {
    std::vector<Interval> out;
    for (BigInt j = 0; j <= k; ++j) {
        if (gcd(j, k) == 1) out.emplace_back(j, k, D);
    }
    return out;
}

/// Every interval with S-smooth k <= k_max, sorted by lower endpoint.
inline std::vector<Interval> intervals(const QuadField& field, const SSet& s, const BigInt& k_max) {
    if (k_max < 1) throw std::invalid_argument("intervals: k_max must be positive");
    std::vector<Interval> out;
    for (const BigInt& k : smooth_numbers(s, k_max)) {
        auto row = intervals_for_k(k, field.D());
        out.insert(out.end(), row.begin(), row.end());
    }
    std::sort(out.begin(), out.end(), interval_order);
    return out;
}

/// Chain of (j, k) pairs that covers the closed unit interval.
struct CoverCertificate {
    BigInt d;
    SSet s;
    BigInt k_max;  ///< smallest bound on k for which the family covers
    BigInt x_bound;  ///< 3q^2 from the search procedure
    std::vector<std::pair<BigInt, BigInt>> chain;
};

/// First point of [0, 1] the greedy sweep could not cover.
struct FailureAt {
    SurdValue point;
};

using SweepResult = std::variant<std::vector<Interval>, FailureAt>;

/// Greedy sweep over open intervals sharing one D: starting from reach 0, repeatedly
/// take the interval with lo < reach maximizing hi. Success (reach > 1) means the closed
/// interval [0, 1] is covered. The chain of chosen intervals is returned on success.
inline SweepResult covers_unit(std::vector<Interval> ivs) {
    if (ivs.empty()) return FailureAt{surd_integer(0, 3)};
    const BigInt D = ivs.front().lo.D;
    if (!std::is_sorted(ivs.begin(), ivs.end(), interval_order))
        std::sort(ivs.begin(), ivs.end(), interval_order);

    const SurdValue one = surd_integer(1, D);
    SurdValue reach = surd_integer(0, D);
    std::vector<Interval> chain;
    std::size_t next = 0;
    while (!surd_less(one, reach)) {
        std::optional<std::size_t> best;
        for (; next < ivs.size() && surd_less(ivs[next].lo, reach); ++next) {
            if (!best || surd_less(ivs[*best].hi, ivs[next].hi)) best = next;
        }
        // intervals scanned in earlier rounds all end at or before the current reach
        if (!best || !surd_less(reach, ivs[*best].hi)) return FailureAt{reach};
        reach = ivs[*best].hi;
        chain.push_back(ivs[*best]);
    }
    return chain;
}

/// Re-checks a (j, k) chain: every k is S-smooth and at most k_max, 0 <= j <= k with
/// gcd(j, k) = 1, each interval has lo < reach < hi, and the final reach exceeds 1.
inline bool verify_cover_chain(const QuadField& field, const SSet& s, const BigInt& k_max,
                               const std::vector<std::pair<BigInt, BigInt>>& chain,
                               std::string* why = nullptr) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    SurdValue reach = surd_integer(0, field.D());
    const SurdValue one = surd_integer(1, field.D());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& [j, k] = chain[i];
        std::string tag = "chain[" + std::to_string(i) + "] = (" + j.str() + "," + k.str() + ")";
        if (k < 1 || k > k_max || !is_s_smooth(k, s)) return fail(tag + ": k not an admissible S-smooth denominator");
        if (j < 0 || j > k || gcd(j, k) != 1) return fail(tag + ": j out of range or not coprime to k");
        Interval iv(j, k, field.D());
        if (!surd_less(iv.lo, reach)) return fail(tag + ": leaves a gap at " + reach.str());
        if (!surd_less(reach, iv.hi)) return fail(tag + ": does not extend the reach");
        reach = iv.hi;
    }
    if (!surd_less(one, reach)) return fail("chain ends at " + reach.str() + ", which does not pass 1");
    return true;
}

struct Inconclusive {
    std::string reason;
};

using EuclideanResult = std::variant<CoverCertificate, Inconclusive>;

/// Covering procedure: with q the smallest prime outside S, enumerate intervals up to
/// X = 3q^2 (or the given cap) and sweep. Reports the smallest k_max that already covers.
inline EuclideanResult certify_euclidean(const QuadField& field, const SSet& s,
                                         std::optional<BigInt> k_cap = std::nullopt) {
    const BigInt q = s.smallest_excluded_prime();
    const BigInt x_bound = 3 * q * q;
    if (field.D() > x_bound) {
        return Inconclusive{"D = " + field.D().str() + " exceeds 3q^2 = " + x_bound.str() +
                            " (q = " + q.str() + "); no interval family can cover"};
    }
    const BigInt limit = k_cap ? std::min(*k_cap, x_bound) : x_bound;
    std::vector<Interval> family;
    std::optional<FailureAt> last;
    for (const BigInt& k : smooth_numbers(s, limit)) {
        auto row = intervals_for_k(k, field.D());
        family.insert(family.end(), row.begin(), row.end());
        std::sort(family.begin(), family.end(), interval_order);
        auto swept = covers_unit(family);
        if (auto* chain = std::get_if<std::vector<Interval>>(&swept)) {
            CoverCertificate cert{field.d(), s, k, x_bound, {}};
            for (const auto& iv : *chain) cert.chain.emplace_back(iv.j, iv.k);
            return cert;
        }
        last = std::get<FailureAt>(swept);
    }
    return Inconclusive{"intervals with k <= " + limit.str() + " leave " +
                        (last ? last->point.str() : std::string("0")) + " uncovered"};
}

/// Smallest integer strictly greater than sqrt(D/3). Any S containing every prime
/// below this bound makes the field S-norm-Euclidean.
inline BigInt theorem2_bound(const QuadField& field) { return isqrt(field.D() / 3) + 1; }

/// All primes below theorem2_bound, as an SSet.
inline SSet theorem2_primes(const QuadField& field) {
    return SSet(primes_below(static_cast<long long>(theorem2_bound(field))));
}

/// A closed gap [lo, hi] with lo <= hi.
struct Gap {
    SurdValue lo;
    SurdValue hi;

    bool contains(const Rational& y) const {
        QuadraticSurd v(y);
        return QuadraticSurd::from(lo) <= v && v <= QuadraticSurd::from(hi);
    }
    QuadraticSurd length() const { return QuadraticSurd::from(hi) - QuadraticSurd::from(lo); }

    friend bool operator==(const Gap&, const Gap&) = default;
};

/// The part of [0, 1] left uncovered by a finite interval family: maximal closed gaps.
struct Residual {
    BigInt d;
    SSet s;
    BigInt k_max;
    std::vector<Gap> gaps;

    QuadraticSurd total_length() const {
        QuadraticSurd total;
        for (const auto& g : gaps) total = total + g.length();
        return total;
    }
};

inline std::vector<Gap> uncovered_gaps(const std::vector<Interval>& sorted, const BigInt& D) {
    // merge into disjoint open components
    std::vector<std::pair<SurdValue, SurdValue>> comps;
    for (const auto& iv : sorted) {
        if (!comps.empty() && surd_less(iv.lo, comps.back().second)) {
            if (surd_less(comps.back().second, iv.hi)) comps.back().second = iv.hi;
        } else {
            comps.emplace_back(iv.lo, iv.hi);
        }
    }
    const SurdValue one = surd_integer(1, D);
    std::vector<Gap> gaps;
    SurdValue cursor = surd_integer(0, D);  // smallest point not yet known to be covered
    for (const auto& [lo, hi] : comps) {
        if (surd_less(one, cursor)) break;
        if (!surd_less(cursor, hi)) continue;
        if (!surd_less(lo, cursor)) {
            gaps.push_back({cursor, surd_less(one, lo) ? one : lo});
            if (surd_less(one, lo)) {
                cursor = hi;
                break;
            }
        }
        cursor = hi;
    }
    if (!surd_less(one, cursor)) gaps.push_back({cursor, one});
    return gaps;
}

/// Uncovered part of [0, 1] for intervals with S-smooth k <= k_max.
inline Residual residual(const QuadField& field, const SSet& s, const BigInt& k_max) {
    return Residual{field.d(), s, k_max, uncovered_gaps(intervals(field, s, k_max), field.D())};
}

/// Checks that the residual gaps trap nothing but the given points. With S = {p}, if y is
/// never covered then neither is p*y mod 1; so when every gap holds exactly one point y0,
/// p*y0 - m is again such a point, and p*G - m meets no other gap (or integer translate),
/// the iterates of an uncovered y stay p^n-times as far from the points as y started,
/// which forces y to be one of them. Requires D > 3.
inline bool verify_contraction(const QuadField& field, long long p, const std::vector<Gap>& gaps,
                               const std::vector<Rational>& points, std::string* why = nullptr) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (field.D() <= 3) return fail("contraction argument needs D > 3");
    std::vector<std::size_t> owner(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        int hits = 0;
        for (std::size_t t = 0; t < points.size(); ++t) {
            if (gaps[i].contains(points[t])) {
                owner[i] = t;
                ++hits;
            }
        }
        if (hits != 1) return fail("gap " + std::to_string(i) + " holds " + std::to_string(hits) + " trapped points");
    }
    const QuadraticSurd lower(Rational(-1)), upper(Rational(2));
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const Rational& y0 = points[owner[i]];
        BigInt m = (Rational(p) * y0).floor();
        Rational image = Rational(p) * y0 - Rational(m);
        auto target = std::find(points.begin(), points.end(), image);
        if (target == points.end()) return fail("p*" + y0.str() + " mod 1 is not a trapped point");
        QuadraticSurd jlo = Rational(p) * QuadraticSurd::from(gaps[i].lo) - QuadraticSurd(Rational(m));
        QuadraticSurd jhi = Rational(p) * QuadraticSurd::from(gaps[i].hi) - QuadraticSurd(Rational(m));
        if (!(lower < jlo && jhi < upper)) return fail("image of gap " + std::to_string(i) + " leaves (-1, 2)");
        for (std::size_t l = 0; l < gaps.size(); ++l) {
            for (int shift = -1; shift <= 1; ++shift) {
                bool own = shift == 0 && points[owner[l]] == image;
                if (own) continue;
                QuadraticSurd glo = QuadraticSurd::from(gaps[l].lo) + QuadraticSurd(Rational(shift));
                QuadraticSurd ghi = QuadraticSurd::from(gaps[l].hi) + QuadraticSurd(Rational(shift));
                if (glo <= jhi && jlo <= ghi)
                    return fail("image of gap " + std::to_string(i) + " meets gap " + std::to_string(l));
            }
        }
    }
    return true;
}

}  // namespace seuclid
