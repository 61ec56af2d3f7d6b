#pragma once

#include "seuclid/covering.hpp"
#include "seuclid/disks.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace seuclid {

/// Certificate for a field whose strip intervals miss finitely many points of [0, 1]:
/// the finite residual traps only those points (checked by contraction under y -> p*y),
/// and on each trapped horizontal line a gap-line certificate finishes the job.
struct ExceptionalBundle {
    BigInt d;
    long long p = 0;
    BigInt k_max;
    std::vector<Gap> gaps;
    std::vector<GapLineCert> lines;

    SSet s() const { return SSet{p}; }
};

struct NotExceptional {};

using ExceptionalResult = std::variant<DiskCertificate, ExceptionalBundle, NotExceptional>;

inline bool is_exceptional_pair(const BigInt& d, long long p) {
    return (d == 10 && p == 2) || (d == 15 && (p == 3 || p == 5)) || (d == 35 && (p == 5 || p == 7));
}

struct BundleReport {
    bool ok = false;
    std::string detail;
};

inline BundleReport verify_bundle(const ExceptionalBundle& bundle) {
    BundleReport rep;
    const QuadField field(bundle.d);
    const SSet s = bundle.s();
    Residual fresh = residual(field, s, bundle.k_max);
    if (fresh.gaps != bundle.gaps) {
        rep.detail = "stored gaps disagree with the residual at k_max = " + bundle.k_max.str();
        return rep;
    }
    std::vector<Rational> trapped;
    for (const auto& line : bundle.lines) trapped.push_back(line.y0);
    std::string why;
    if (!verify_contraction(field, bundle.p, bundle.gaps, trapped, &why)) {
        rep.detail = "contraction: " + why;
        return rep;
    }
    for (const auto& line : bundle.lines) {
        auto r = verify_gap_line(field, s, line);
        if (!r.ok) {
            rep.detail = "gap line y0 = " + line.y0.str() + ": " + r.detail;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

namespace tables {

inline KElement elt(const QuadField& f, long long a, long long b, long long c = 1) {
    return KElement(f, BigInt(a), BigInt(b), BigInt(c));
}

/// Centres for Q(sqrt(-35)), S = {5}: four unit disks, four of radius 1/5, six of radius sqrt(5)/5.
inline std::vector<KElement> centers_35_5() {
    QuadField f(35);
    return {elt(f, 0, 0), elt(f, 1, 0), elt(f, 0, 1), elt(f, 1, 1),
            elt(f, 1, 2, 5), elt(f, 2, 2, 5), elt(f, 3, 3, 5), elt(f, 4, 3, 5),
            elt(f, 2, 1, 5), elt(f, -1, 2, 5), elt(f, 6, 3, 5), elt(f, 3, 4, 5), elt(f, 4, 2, 5), elt(f, 1, 3, 5)};
}

/// Centres for Q(sqrt(-35)), S = {7}: four unit disks, eight of radius 1/7, eight of radius sqrt(7)/7.
inline std::vector<KElement> centers_35_7() {
    QuadField f(35);
    return {elt(f, 0, 0), elt(f, 1, 0), elt(f, 0, 1), elt(f, 1, 1),
            elt(f, 3, 2, 7), elt(f, 5, 3, 7), elt(f, 6, 3, 7), elt(f, 7, 3, 7),
            elt(f, 0, 4, 7), elt(f, 1, 4, 7), elt(f, 2, 4, 7), elt(f, 5, 5, 7),
            elt(f, 3, 1, 7), elt(f, -1, 2, 7), elt(f, 6, 2, 7), elt(f, 2, 3, 7),
            elt(f, 5, 4, 7), elt(f, 1, 5, 7), elt(f, 8, 5, 7), elt(f, 4, 6, 7)};
}

inline DiskCertificate disk_certificate_35(long long p) {
    QuadField f(35);
    SSet s{p};
    DiskCertificate cert{35, s, {}, 125, 4};
    for (const auto& c : p == 5 ? centers_35_5() : centers_35_7()) cert.disks.push_back(make_disk(f, s, c));
    return cert;
}

inline QuadraticSurd root(long long num, long long den, long long snum, long long sden, long long radicand) {
    return QuadraticSurd(Rational(BigInt(num), BigInt(den)), Rational(BigInt(snum), BigInt(sden)), BigInt(radicand));
}

inline GapPiece piece(const QuadField& f, const SSet& s, const Rational& y0, KElement alpha, QuadraticSurd lo,
                      bool lo_open, QuadraticSurd hi, bool hi_open) {
    QuadPoly bound = gap_line_bound(f, s, y0, alpha);
    return GapPiece{std::move(alpha), bound, std::move(lo), std::move(hi), lo_open, hi_open};
}

/// Q(sqrt(-10)), S = {2}, lines y = 1/3 and y = 2/3. The middle piece uses
/// N_S <= 8(x - 1/2)^2 + 5/9 (the numerator is odd, so all of 2^3 survives), good on
/// |x - 1/2| < sqrt(2)/6.
inline GapLineCert gap_line_10(const Rational& y0) {
    QuadField f(10);
    SSet s{2};
    const bool lower = y0 == Rational(BigInt(1), BigInt(3));
    GapLineCert cert{y0, {}, {}};
    cert.pieces.push_back(piece(f, s, y0, elt(f, 0, 1, 2), root(0, 1, 0, 1, 1), false, root(0, 1, 1, 3, 2), true));
    cert.pieces.push_back(piece(f, s, y0, elt(f, 2, 1, 2), root(1, 1, -1, 3, 2), true, root(1, 1, 0, 1, 1), false));
    cert.pieces.push_back(piece(f, s, y0, lower ? elt(f, 2, 1, 4) : elt(f, 2, 3, 4), root(1, 2, -1, 6, 2), true,
                                root(1, 2, 1, 6, 2), true));
    return cert;
}

/// Q(sqrt(-15)), S = {p} with p in {3, 5}, line y = 1/2: alpha = w on (0, 1/2), alpha = 1
/// on (1/2, 1), and explicit centres for x = 0, 1/2, 1.
inline GapLineCert gap_line_15(long long p) {
    QuadField f(15);
    SSet s{p};
    const Rational half(BigInt(1), BigInt(2));
    GapLineCert cert{half, {}, {}};
    cert.pieces.push_back(piece(f, s, half, elt(f, 0, 1), root(0, 1, 0, 1, 1), true, root(1, 2, 0, 1, 1), true));
    cert.pieces.push_back(piece(f, s, half, elt(f, 1, 0), root(1, 2, 0, 1, 1), true, root(1, 1, 0, 1, 1), true));
    if (p == 3) {
        cert.points = {{Rational(0), elt(f, 1, 1, 3)}, {half, elt(f, 0, 0)}, {Rational(1), elt(f, 4, 1, 3)}};
    } else {
        cert.points = {{Rational(0), elt(f, -1, 0)}, {half, elt(f, 2, 0)}, {Rational(1), elt(f, 0, 0)}};
    }
    return cert;
}

inline ExceptionalBundle bundle_10() {
    QuadField f(10);
    ExceptionalBundle b{10, 2, 64, {}, {}};
    b.gaps = residual(f, b.s(), b.k_max).gaps;
    b.lines = {gap_line_10(Rational(BigInt(1), BigInt(3))), gap_line_10(Rational(BigInt(2), BigInt(3)))};
    return b;
}

inline ExceptionalBundle bundle_15(long long p) {
    QuadField f(15);
    ExceptionalBundle b{15, p, p == 3 ? 81 : 125, {}, {}};
    b.gaps = residual(f, b.s(), b.k_max).gaps;
    b.lines = {gap_line_15(p)};
    return b;
}

}  // namespace tables

/// Built-in certificates for (10,2), (15,3), (15,5), (35,5), (35,7), verified before
/// being returned. Any other pair is NotExceptional.
inline ExceptionalResult certify_exceptional(const BigInt& d, long long p) {
    if (!is_exceptional_pair(d, p)) return NotExceptional{};
    if (d == 35) {
        DiskCertificate cert = tables::disk_certificate_35(p);
        auto rep = verify_disk_cert(cert);
        if (!rep.ok) throw std::logic_error("built-in disk certificate failed: " + rep.detail);
        return cert;
    }
    ExceptionalBundle bundle = d == 10 ? tables::bundle_10() : tables::bundle_15(p);
    auto rep = verify_bundle(bundle);
    if (!rep.ok) throw std::logic_error("built-in exceptional bundle failed: " + rep.detail);
    return bundle;
}

}  // namespace seuclid
