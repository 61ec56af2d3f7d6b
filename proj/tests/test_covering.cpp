#include "support.hpp"

#include <gtest/gtest.h>

using namespace seuclid;
using namespace testing_support;

namespace {

Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

const CoverCertificate& cover(const EuclideanResult& r) { return std::get<CoverCertificate>(r); }

bool covers(const QuadField& f, const SSet& s, long long k_max) {
    return std::holds_alternative<std::vector<Interval>>(covers_unit(intervals(f, s, BigInt(k_max))));
}

// {c y} < sqrt(3/D) or {c y} > 1 - sqrt(3/D), by squaring nonnegative quantities
bool close_to_smooth_multiple(const Rational& y, const BigInt& c, const BigInt& D) {
    const Rational cy = Rational(c) * y;
    const Rational frac = cy - Rational(cy.floor());
    const Rational other = Rational(1) - frac;
    return frac * frac * Rational(D) < Rational(3) || other * other * Rational(D) < Rational(3);
}

}  // namespace

TEST(Intervals, Counts) {
    const QuadField f(67);
    EXPECT_EQ(intervals(f, SSet{}, BigInt(1)).size(), 2u);
    EXPECT_EQ(intervals(f, SSet{2}, BigInt(2)).size(), 3u);
    EXPECT_EQ(intervals(f, SSet{2, 3}, BigInt(4)).size(), 7u);
    EXPECT_EQ(intervals(f, SSet{2, 3, 5}, BigInt(6)).size(), 13u);
    EXPECT_THROW(intervals(f, SSet{}, BigInt(0)), std::invalid_argument);
}

TEST(Intervals, Invariants) {
    const QuadField f(143);
    const SSet s{2, 3, 5};
    const auto ivs = intervals(f, s, BigInt(90));
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        const auto& iv = ivs[i];
        ASSERT_TRUE(surd_less(iv.lo, iv.hi));
        ASSERT_TRUE(is_s_smooth(iv.k, s));
        ASSERT_TRUE(iv.j >= 0 && iv.j <= iv.k);
        ASSERT_EQ(gcd(iv.j, iv.k), 1);
        ASSERT_EQ(iv.lo, SurdValue(iv.j, -1, iv.k, f.D()));
        if (i) ASSERT_FALSE(surd_less(ivs[i].lo, ivs[i - 1].lo));
    }
}

TEST(CoversUnit, Examples) {
    const QuadField f67(67);
    auto swept = covers_unit(intervals(f67, SSet{2, 3}, BigInt(4)));
    ASSERT_TRUE(std::holds_alternative<std::vector<Interval>>(swept));
    EXPECT_EQ(std::get<std::vector<Interval>>(swept).size(), 7u);

    const QuadField f3(3);
    auto unit = covers_unit(intervals(f3, SSet{}, BigInt(1)));
    ASSERT_TRUE(std::holds_alternative<std::vector<Interval>>(unit));
    const auto& chain = std::get<std::vector<Interval>>(unit);
    ASSERT_EQ(chain.size(), 2u);
    EXPECT_EQ(chain[0].j, 0);
    EXPECT_EQ(chain[1].j, 1);

    auto none = covers_unit({});
    ASSERT_TRUE(std::holds_alternative<FailureAt>(none));
    EXPECT_EQ(QuadraticSurd::from(std::get<FailureAt>(none).point), QuadraticSurd(Rational(0)));
}

TEST(CoversUnit, TenStopsAtOneThird) {
    const QuadField f(10);
    for (long long k_max : {2, 4, 8, 16, 64, 256}) {
        auto swept = covers_unit(intervals(f, SSet{2}, BigInt(k_max)));
        ASSERT_TRUE(std::holds_alternative<FailureAt>(swept)) << k_max;
        // the sweep halts at the lower end of the gap around 1/3
        const QuadraticSurd at = QuadraticSurd::from(std::get<FailureAt>(swept).point);
        EXPECT_LE(at, QuadraticSurd(q(1, 3)));
        EXPECT_TRUE(residual(f, SSet{2}, BigInt(k_max)).gaps.front().contains(q(1, 3)));
        EXPECT_EQ(QuadraticSurd::from(residual(f, SSet{2}, BigInt(k_max)).gaps.front().lo), at);
    }
}

TEST(CertifyEuclidean, Examples) {
    auto r5 = certify_euclidean(QuadField(5), SSet{2});
    ASSERT_TRUE(std::holds_alternative<CoverCertificate>(r5));
    EXPECT_EQ(cover(r5).k_max, 2);
    EXPECT_EQ(cover(r5).x_bound, 27);
    EXPECT_TRUE(std::holds_alternative<Inconclusive>(certify_euclidean(QuadField(5), SSet{})));
    EXPECT_TRUE(std::holds_alternative<CoverCertificate>(certify_euclidean(QuadField(143), SSet{2, 3, 5})));
    auto r67 = certify_euclidean(QuadField(67), SSet{2, 3});
    EXPECT_EQ(cover(r67).k_max, 4);
    EXPECT_EQ(cover(r67).chain.size(), 7u);
}

TEST(CertifyEuclidean, CapLimitsSearch) {
    EXPECT_TRUE(std::holds_alternative<Inconclusive>(certify_euclidean(QuadField(67), SSet{2, 3}, BigInt(3))));
    EXPECT_TRUE(std::holds_alternative<CoverCertificate>(certify_euclidean(QuadField(67), SSet{2, 3}, BigInt(4))));
}

TEST(CertifyEuclidean, DiscriminantCutoff) {
    // D > 3q^2 can never be covered
    for (long long d = 1; d < 300; ++d) {
        if (!squarefree(BigInt(d))) continue;
        const QuadField f(d);
        for (const SSet& s : {SSet{}, SSet{2}, SSet{2, 3}, SSet{3, 5}}) {
            const BigInt qq = s.smallest_excluded_prime();
            if (f.D() > 3 * qq * qq) ASSERT_TRUE(std::holds_alternative<Inconclusive>(certify_euclidean(f, s)));
        }
    }
}

TEST(CertifyEuclidean, MinimalKmaxIsMinimal) {
    for (long long d : {1, 2, 3, 5, 7, 11, 15, 19, 23, 35, 67, 143}) {
        const QuadField f(d);
        for (const SSet& s : {SSet{}, SSet{2}, SSet{2, 3}, SSet{2, 3, 5}}) {
            auto r = certify_euclidean(f, s);
            if (!std::holds_alternative<CoverCertificate>(r)) continue;
            const BigInt k = cover(r).k_max;
            EXPECT_TRUE(covers(f, s, static_cast<long long>(k)));
            const auto below = smooth_numbers(s, k - 1);
            if (!below.empty()) EXPECT_FALSE(covers(f, s, static_cast<long long>(below.back()))) << d << s.str();
        }
    }
}

TEST(VerifyCoverChain, ReplayAndTamper) {
    const QuadField f(67);
    const SSet s{2, 3};
    CoverCertificate cert = cover(certify_euclidean(f, s));
    std::string why;
    EXPECT_TRUE(verify_cover_chain(f, s, cert.k_max, cert.chain, &why)) << why;

    auto dropped = cert.chain;
    dropped.erase(dropped.begin() + 3);
    EXPECT_FALSE(verify_cover_chain(f, s, cert.k_max, dropped, &why));
    EXPECT_NE(why.find("gap"), std::string::npos);

    auto truncated = cert.chain;
    truncated.pop_back();
    EXPECT_FALSE(verify_cover_chain(f, s, cert.k_max, truncated, &why));

    auto foreign = cert.chain;
    foreign[1] = {BigInt(1), BigInt(5)};
    EXPECT_FALSE(verify_cover_chain(f, s, BigInt(5), foreign, &why));

    EXPECT_FALSE(verify_cover_chain(f, s, BigInt(3), cert.chain, &why));
    EXPECT_FALSE(verify_cover_chain(f, s, cert.k_max, {}, &why));
}

TEST(VerifyCoverChain, EveryCertificateReplays) {
    for (long long d = 1; d <= 150; ++d) {
        if (!squarefree(BigInt(d))) continue;
        const QuadField f(d);
        for (const SSet& s : {SSet{}, SSet{2}, SSet{3}, SSet{2, 3}, SSet{2, 3, 5}}) {
            auto r = certify_euclidean(f, s);
            if (auto* c = std::get_if<CoverCertificate>(&r)) {
                std::string why;
                ASSERT_TRUE(verify_cover_chain(f, s, c->k_max, c->chain, &why)) << d << s.str() << why;
            }
        }
    }
}

TEST(Monotonicity, LargerSetsAndBounds) {
    const std::vector<SSet> chain = {SSet{}, SSet{2}, SSet{2, 3}, SSet{2, 3, 5}, SSet{2, 3, 5, 7}};
    for (long long d = 1; d <= 150; ++d) {
        if (!squarefree(BigInt(d))) continue;
        const QuadField f(d);
        for (long long k_max : {1, 2, 4, 6, 12}) {
            bool seen = false;
            for (const SSet& s : chain) {
                const bool now = covers(f, s, k_max);
                ASSERT_TRUE(!seen || now) << d << " " << s.str() << " " << k_max;
                seen = seen || now;
            }
        }
        for (const SSet& s : chain) {
            bool seen = false;
            for (long long k_max : {1, 2, 4, 6, 12, 24, 36}) {
                const bool now = covers(f, s, k_max);
                ASSERT_TRUE(!seen || now);
                seen = seen || now;
            }
        }
    }
}

TEST(PrimeBound, BoundExamples) {
    EXPECT_EQ(theorem2_bound(QuadField(163)), 8);
    EXPECT_EQ(theorem2_primes(QuadField(163)), (SSet{2, 3, 5, 7}));
    EXPECT_EQ(theorem2_bound(QuadField(3)), 2);
    EXPECT_TRUE(theorem2_primes(QuadField(3)).empty());
    EXPECT_EQ(theorem2_bound(QuadField(5)), 3);
    EXPECT_EQ(theorem2_primes(QuadField(5)), (SSet{2}));
}

TEST(PrimeBound, StrictCeiling) {
    for (long long d = 1; d <= 2000; ++d) {
        if (!squarefree(BigInt(d))) continue;
        const QuadField f(d);
        const BigInt b = theorem2_bound(f);
        // b - 1 <= sqrt(D/3) < b, i.e. 3(b-1)^2 <= D < 3b^2
        ASSERT_LE(3 * (b - 1) * (b - 1), f.D());
        ASSERT_LT(f.D(), 3 * b * b);
    }
}

TEST(PrimeBound, CertifiesSmallFields) {
    for (long long d = 1; d <= 120; ++d) {
        if (!squarefree(BigInt(d))) continue;
        const QuadField f(d);
        ASSERT_TRUE(std::holds_alternative<CoverCertificate>(certify_euclidean(f, theorem2_primes(f)))) << d;
    }
}

TEST(Residual, Examples) {
    const QuadField f10(10), f15(15), f5(5);
    Residual r10 = residual(f10, SSet{2}, BigInt(64));
    ASSERT_EQ(r10.gaps.size(), 2u);
    EXPECT_TRUE(r10.gaps[0].contains(q(1, 3)));
    EXPECT_TRUE(r10.gaps[1].contains(q(2, 3)));
    for (const auto& g : r10.gaps) EXPECT_LT(g.length(), QuadraticSurd(q(1, 100)));

    Residual r15 = residual(f15, SSet{3}, BigInt(81));
    ASSERT_EQ(r15.gaps.size(), 1u);
    EXPECT_TRUE(r15.gaps[0].contains(q(1, 2)));

    EXPECT_TRUE(residual(f5, SSet{2}, BigInt(2)).gaps.empty());
}

TEST(Residual, GapsAvoidEveryInterval) {
    const QuadField f(10);
    const SSet s{2};
    const auto ivs = intervals(f, s, BigInt(64));
    for (const auto& g : residual(f, s, BigInt(64)).gaps) {
        for (const auto& iv : ivs) {
            // [lo, hi] and (iv.lo, iv.hi) disjoint
            ASSERT_TRUE(!surd_less(g.lo, iv.hi) || !surd_less(iv.lo, g.hi));
        }
    }
}

TEST(Residual, MirrorSymmetry) {
    for (auto [d, p] : std::vector<std::pair<long long, long long>>{{10, 2}, {15, 3}, {15, 5}, {35, 5}, {26, 2}, {21, 5}}) {
        const QuadField f(d);
        for (long long k_max : {1, 3, 8, 25}) {
            const auto gaps = residual(f, SSet{p}, BigInt(k_max)).gaps;
            for (std::size_t i = 0; i < gaps.size(); ++i) {
                const auto& g = gaps[i];
                const auto& m = gaps[gaps.size() - 1 - i];
                ASSERT_EQ(QuadraticSurd(Rational(1)) - QuadraticSurd::from(g.lo), QuadraticSurd::from(m.hi));
                ASSERT_EQ(QuadraticSurd(Rational(1)) - QuadraticSurd::from(g.hi), QuadraticSurd::from(m.lo));
            }
        }
    }
}

TEST(Residual, LengthNonIncreasing) {
    for (auto [d, p] : std::vector<std::pair<long long, long long>>{{10, 2}, {15, 3}, {15, 5}, {35, 7}, {41, 3}}) {
        const QuadField f(d);
        std::optional<QuadraticSurd> last;
        for (long long k_max = 1; k_max <= 130; ++k_max) {
            const QuadraticSurd len = residual(f, SSet{p}, BigInt(k_max)).total_length();
            if (last) ASSERT_LE(len, *last) << d << " " << k_max;
            last = len;
        }
    }
}

TEST(SmoothMultiples, CoverImpliesSmallFractionalPart) {
    const std::vector<std::pair<long long, SSet>> cases = {{5, SSet{2}}, {67, SSet{2, 3}}, {143, SSet{2, 3, 5}},
                                                           {23, SSet{2}}, {15, SSet{3}}};
    for (const auto& [d, s] : cases) {
        const QuadField f(d);
        auto r = certify_euclidean(f, s);
        if (!std::holds_alternative<CoverCertificate>(r)) {
            ASSERT_EQ(d, 15);  // covers only up to a single point; see the exceptional bundle
            continue;
        }
        const BigInt k_max = cover(r).k_max;
        const auto smooth = smooth_numbers(s, k_max);
        for (int trial = 0; trial < 1000; ++trial) {
            const long long den = uniform(1, 5000);
            const Rational y(BigInt(uniform(0, den)), BigInt(den));
            bool found = false;
            for (const auto& c : smooth) found = found || close_to_smooth_multiple(y, c, f.D());
            ASSERT_TRUE(found) << d << " " << y;
        }
    }
}

TEST(Contraction, ExceptionalResiduals) {
    std::string why;
    const QuadField f10(10), f15(15);
    EXPECT_TRUE(verify_contraction(f10, 2, residual(f10, SSet{2}, BigInt(64)).gaps, {q(1, 3), q(2, 3)}, &why)) << why;
    EXPECT_TRUE(verify_contraction(f15, 3, residual(f15, SSet{3}, BigInt(81)).gaps, {q(1, 2)}, &why)) << why;
    EXPECT_TRUE(verify_contraction(f15, 5, residual(f15, SSet{5}, BigInt(125)).gaps, {q(1, 2)}, &why)) << why;
}

TEST(Contraction, RejectsBadData) {
    std::string why;
    const QuadField f10(10);
    const auto gaps = residual(f10, SSet{2}, BigInt(64)).gaps;
    // 1/3 maps to 2/3, which is not listed
    EXPECT_FALSE(verify_contraction(f10, 2, gaps, {q(1, 3)}, &why));
    // the second gap left without a trapped point
    EXPECT_FALSE(verify_contraction(f10, 2, gaps, {q(1, 3), q(3, 4)}, &why));
    // at k_max = 1 a single gap holds both points
    const auto wide = residual(f10, SSet{2}, BigInt(1)).gaps;
    EXPECT_FALSE(verify_contraction(f10, 2, wide, {q(1, 3), q(2, 3)}, &why));
    EXPECT_FALSE(verify_contraction(QuadField(3), 2, {}, {}, &why));
}
