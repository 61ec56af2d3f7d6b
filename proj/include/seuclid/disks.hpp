#pragma once

#include "seuclid/exact/number_theory.hpp"
#include "seuclid/exact/surd.hpp"
#include "seuclid/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seuclid {

/// Open disk {xi : |xi - center|^2 < r_squared} around an S-integer.
struct Disk {
    KElement center;
    Rational r_squared;
    bool boosted = false;
};

struct DiskCertificate {
    BigInt d;
    SSet s;
    std::vector<Disk> disks;
    int subdivision_depth = 125;  ///< F is cut into n x n cells in basis coordinates
    int adaptive_depth = 4;       ///< extra quartering rounds allowed for a stubborn cell
};

/// Squared radius available around alpha: p/c^2 when the boost congruences hold
/// (-d = 1 mod 4, p | d, c = 0, b != 0 and 2a + b = 0 mod p), otherwise 1/c^2.
inline Rational boost_radius(const QuadField& field, const SSet& s, const KElement& alpha) {
    if (s.size() != 1 || s.primes().front() == 2)
        throw std::invalid_argument("boost_radius: S must be a single odd prime");
    const long long p = s.primes().front();
    const BigInt c = denom_s(alpha, s);
    const Rational plain(BigInt(1), c * c);
    if (!field.half_integer() || field.d() % p != 0) return plain;
    if (c % p != 0 || alpha.b() % p == 0 || (2 * alpha.a() + alpha.b()) % p != 0) return plain;
    return Rational(BigInt(p), c * c);
}

/// Disk with the radius 1/denom_S(alpha), boosted when S is one odd prime and the
/// congruences allow it.
inline Disk make_disk(const QuadField& field, const SSet& s, const KElement& alpha) {
    const BigInt c = denom_s(alpha, s);
    if (s.size() == 1 && s.primes().front() != 2) {
        Rational r2 = boost_radius(field, s, alpha);
        return Disk{alpha, r2, r2 != Rational(BigInt(1), c * c)};
    }
    return Disk{alpha, Rational(BigInt(1), c * c), false};
}

struct DiskReport {
    bool ok = false;
    std::string detail;
    std::size_t refined_cells = 0;
};

namespace detail {

/// Integer data for testing corners (i/N, j/N) against one disk.
struct DiskTest {
    BigInt a, b, c, rn, rd;

    // |corner - center|^2 < r^2  <=>  form(i c - a N, j c - b N) * rd < rn * (N c)^2
    bool inside(const QuadField& f, const BigInt& i, const BigInt& j, const BigInt& n) const {
        BigInt u = i * c - a * n;
        BigInt v = j * c - b * n;
        BigInt nc = n * c;
        return f.norm_form(u, v) * rd < rn * nc * nc;
    }
};

inline bool cell_in_disk(const QuadField& f, const DiskTest& t, const BigInt& i, const BigInt& j,
                         const BigInt& n) {
    return t.inside(f, i, j, n) && t.inside(f, i + 1, j, n) && t.inside(f, i, j + 1, n) &&
           t.inside(f, i + 1, j + 1, n);
}

inline bool cell_covered(const QuadField& f, const std::vector<DiskTest>& tests, const BigInt& i,
                         const BigInt& j, const BigInt& n, int depth_left) {
    for (const auto& t : tests) {
        if (cell_in_disk(f, t, i, j, n)) return true;
    }
    if (depth_left == 0) return false;
    const BigInt n2 = 2 * n;
    for (int di = 0; di < 2; ++di) {
        for (int dj = 0; dj < 2; ++dj) {
            if (!cell_covered(f, tests, 2 * i + di, 2 * j + dj, n2, depth_left - 1)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Checks every disk's claimed radius, then cuts F into n x n congruent parallelograms
/// and requires each one to lie inside some disk. The squared distance is convex, so a
/// cell is inside a disk as soon as its four corners are (strictly). Cells that fit no
/// disk are quartered up to adaptive_depth times before the check gives up.
inline DiskReport verify_disk_cert(const DiskCertificate& cert) {
    DiskReport report;
    if (cert.subdivision_depth < 1) {
        report.detail = "subdivision_depth must be at least 1";
        return report;
    }
    const QuadField field(cert.d);
    std::vector<detail::DiskTest> tests;
    for (std::size_t idx = 0; idx < cert.disks.size(); ++idx) {
        const Disk& disk = cert.disks[idx];
        const std::string tag = "disk " + std::to_string(idx) + " at " + disk.center.str();
        if (!(disk.center.field() == field)) {
            report.detail = tag + ": center lies in another field";
            return report;
        }
        if (!in_o_s(disk.center, cert.s)) {
            report.detail = tag + ": center is not an S-integer";
            return report;
        }
        const BigInt c = disk.center.c();
        Rational allowed(BigInt(1), c * c);
        if (disk.boosted) {
            Rational boosted = boost_radius(field, cert.s, disk.center);
            if (boosted == allowed) {
                report.detail = tag + ": boost congruences fail";
                return report;
            }
            allowed = boosted;
        }
        if (disk.r_squared != allowed) {
            report.detail = tag + ": claimed r^2 = " + disk.r_squared.str() + " but " + allowed.str() + " is admissible";
            return report;
        }
        tests.push_back({disk.center.a(), disk.center.b(), c, disk.r_squared.num(), disk.r_squared.den()});
    }

    const int n = cert.subdivision_depth;
    const BigInt bn(n);
    // corner membership on the base grid, shared between neighbouring cells
    const std::size_t side = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<char>> corner(tests.size(), std::vector<char>(side * side));
    for (std::size_t t = 0; t < tests.size(); ++t) {
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) corner[t][i * side + j] = tests[t].inside(field, BigInt(i), BigInt(j), bn);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool inside = false;
            for (std::size_t t = 0; t < tests.size() && !inside; ++t) {
                const auto& m = corner[t];
                inside = m[i * side + j] && m[(i + 1) * side + j] && m[i * side + j + 1] && m[(i + 1) * side + j + 1];
            }
            if (inside) continue;
            ++report.refined_cells;
            if (!detail::cell_covered(field, tests, BigInt(i), BigInt(j), bn, cert.adaptive_depth)) {
                report.detail = "cell [" + std::to_string(i) + "/" + std::to_string(n) + ", " + std::to_string(i + 1) +
                                "/" + std::to_string(n) + "] x [" + std::to_string(j) + "/" + std::to_string(n) + ", " +
                                std::to_string(j + 1) + "/" + std::to_string(n) + "] lies in no disk";
                return report;
            }
        }
    }
    report.ok = true;
    return report;
}

/// Quadratic x2*x^2 + x1*x + x0 in the horizontal coordinate of a gap line.
struct QuadPoly {
    Rational x2, x1, x0;

    Rational operator()(const Rational& x) const { return (x2 * x + x1) * x + x0; }
    friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
    std::string str() const { return x2.str() + "*x^2 + " + x1.str() + "*x + " + x0.str(); }
};

/// One stretch of the line {x + y0 w}: the claim that N_S(xi - alpha) <= bound(x) < 1
/// on the stated x-range.
struct GapPiece {
    KElement alpha;
    QuadPoly bound;
    QuadraticSurd lo, hi;
    bool lo_open = true;
    bool hi_open = true;
};

/// An isolated point x of the line handled by an explicit alpha.
struct GapPoint {
    Rational x;
    KElement alpha;
};

struct GapLineCert {
    Rational y0;
    std::vector<GapPiece> pieces;
    std::vector<GapPoint> points;
};

/// Majorant of N_S(x + y0 w - alpha) valid for every rational x whose denominator is
/// prime to S: N(...) is a quadratic Q(x) over Q, and with E the common denominator of
/// its coefficients, s^2 E Q(r/s) is an integer, so N_S <= S-part(E) * Q(x).
inline QuadPoly gap_line_bound(const QuadField& field, const SSet& s, const Rational& y0, const KElement& alpha) {
    const Rational a = alpha.u();
    const Rational v = y0 - alpha.v();
    QuadPoly q;
    if (field.half_integer()) {
        const Rational k((field.d() + 1) / 4);
        q = {Rational(1), v - Rational(2) * a, a * a - a * v + k * v * v};
    } else {
        q = {Rational(1), Rational(-2) * a, a * a + Rational(field.d()) * v * v};
    }
    BigInt e = 1;
    for (const Rational* c : {&q.x2, &q.x1, &q.x0}) e = e / gcd(e, c->den()) * c->den();
    const Rational scale(s_part(e, s));
    return {scale * q.x2, scale * q.x1, scale * q.x0};
}

/// Span of reals with open/closed ends, used by the gap-line coverage sweep.
struct Span {
    QuadraticSurd lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;
};

/// Whether finitely many spans cover the closed interval [0, 1]; on failure writes the
/// first uncovered point.
inline bool spans_cover_unit(const std::vector<Span>& spans, QuadraticSurd* failure = nullptr) {
    QuadraticSurd reach(Rational(0));
    bool reach_covered = false;  // covered so far: [0, reach) plus reach itself if flag set
    const QuadraticSurd one(Rational(1));
    while (!(reach > one || (reach == one && reach_covered))) {
        std::optional<std::size_t> best;
        auto better = [&](const Span& x, const Span& y) {  // x strictly extends further than y
            return x.hi > y.hi || (x.hi == y.hi && x.hi_closed && !y.hi_closed);
        };
        for (std::size_t i = 0; i < spans.size(); ++i) {
            const Span& sp = spans[i];
            bool attaches = reach_covered ? sp.lo <= reach : (sp.lo < reach || (sp.lo == reach && sp.lo_closed));
            bool extends = sp.hi > reach || (sp.hi == reach && sp.hi_closed && !reach_covered);
            if (attaches && extends && (!best || better(sp, spans[*best]))) best = i;
        }
        if (!best) {
            if (failure) *failure = reach;
            return false;
        }
        reach = spans[*best].hi;
        reach_covered = spans[*best].hi_closed;
    }
    return true;
}

struct GapLineReport {
    bool ok = false;
    std::string detail;
};

/// Verifies a gap-line certificate: each piece's bound equals the majorant derived from
/// its alpha and is < 1 on the claimed range, each point has N_S(xi - alpha) < 1, and the
/// ranges plus points cover [0, 1].
inline GapLineReport verify_gap_line(const QuadField& field, const SSet& s, const GapLineCert& cert) {
    GapLineReport rep;
    auto fail = [&](std::string msg) {
        rep.detail = std::move(msg);
        return rep;
    };
    if (cert.y0 < Rational(0) || cert.y0 > Rational(1)) return fail("y0 outside [0,1]");
    if (!coprime_to(cert.y0.den(), s)) return fail("y0 denominator shares a prime with S");
    if (cert.pieces.empty() && cert.points.empty()) return fail("no pieces");

    std::vector<Span> spans;
    for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
        const GapPiece& piece = cert.pieces[i];
        const std::string tag = "piece " + std::to_string(i) + " (alpha = " + piece.alpha.str() + ")";
        if (!in_o_s(piece.alpha, s)) return fail(tag + ": alpha is not an S-integer");
        QuadPoly derived = gap_line_bound(field, s, cert.y0, piece.alpha);
        if (!(derived == piece.bound))
            return fail(tag + ": stated bound " + piece.bound.str() + " differs from derived " + derived.str());
        // {bound < 1} is the open interval between the roots of bound(x) = 1
        const QuadPoly& f = derived;
        Rational disc = f.x1 * f.x1 - Rational(4) * f.x2 * (f.x0 - Rational(1));
        if (disc.sign() <= 0) return fail(tag + ": bound never drops below 1");
        Rational half_inv = Rational(1) / (Rational(2) * f.x2);
        QuadraticSurd centre(-f.x1 * half_inv);
        QuadraticSurd spread = half_inv * QuadraticSurd::sqrt_of(disc);
        QuadraticSurd root_lo = centre - spread, root_hi = centre + spread;
        bool lo_ok = piece.lo_open ? piece.lo >= root_lo : piece.lo > root_lo;
        bool hi_ok = piece.hi_open ? piece.hi <= root_hi : piece.hi < root_hi;
        if (!lo_ok || !hi_ok)
            return fail(tag + ": range not inside {bound < 1} = (" + root_lo.str() + ", " + root_hi.str() + ")");
        if (piece.lo > piece.hi) return fail(tag + ": empty range");
        spans.push_back({piece.lo, piece.hi, !piece.lo_open, !piece.hi_open});
    }
    for (std::size_t i = 0; i < cert.points.size(); ++i) {
        const GapPoint& pt = cert.points[i];
        const std::string tag = "point x = " + pt.x.str();
        if (!coprime_to(pt.x.den(), s)) return fail(tag + ": denominator shares a prime with S");
        if (!in_o_s(pt.alpha, s)) return fail(tag + ": alpha is not an S-integer");
        KElement xi = KElement::from_coords(field, pt.x, cert.y0);
        Rational value = s_norm(xi - pt.alpha, s);
        if (value >= Rational(1)) return fail(tag + ": N_S(xi - alpha) = " + value.str() + " is not below 1");
        spans.push_back({QuadraticSurd(pt.x), QuadraticSurd(pt.x), true, true});
    }
    QuadraticSurd hole;
    if (!spans_cover_unit(spans, &hole)) return fail("x = " + hole.str() + " is not covered");
    rep.ok = true;
    return rep;
}

}  // namespace seuclid
