#pragma once

#include "seuclid/survey.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace seuclid {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

/// Raised for anything that does not parse as a certificate: bad JSON, missing or
/// mistyped fields, values that violate a type invariant.
struct CertificateParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace io {

inline json big(const BigInt& x) { return x.str(); }

inline BigInt big(const json& j, const char* what) {
    if (!j.is_string()) throw CertificateParseError(std::string(what) + ": expected an integer string");
    try {
        return parse_bigint(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw CertificateParseError(std::string(what) + ": malformed integer " + j.get<std::string>());
    }
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw CertificateParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline long long small(const json& j, const char* what) {
    if (!j.is_number_integer()) throw CertificateParseError(std::string(what) + ": expected an integer");
    return j.get<long long>();
}

inline bool flag(const json& j, const char* what) {
    if (!j.is_boolean()) throw CertificateParseError(std::string(what) + ": expected a boolean");
    return j.get<bool>();
}

inline const json& array(const json& j, const char* what) {
    if (!j.is_array()) throw CertificateParseError(std::string(what) + ": expected an array");
    return j;
}

inline json rational(const Rational& q) { return {{"num", big(q.num())}, {"den", big(q.den())}}; }

inline Rational rational(const json& j) {
    BigInt den = big(field(j, "den"), "den");
    if (den == 0) throw CertificateParseError("rational with zero denominator");
    return Rational(big(field(j, "num"), "num"), den);
}

inline json surd_value(const SurdValue& v) {
    return {{"j", big(v.j)}, {"s", v.s}, {"k", big(v.k)}, {"D", big(v.D)}};
}

inline SurdValue surd_value(const json& j) {
    return SurdValue(big(field(j, "j"), "j"), static_cast<int>(small(field(j, "s"), "s")), big(field(j, "k"), "k"),
                     big(field(j, "D"), "D"));
}

inline json surd(const QuadraticSurd& x) {
    return {{"p", rational(x.rational_part())}, {"q", rational(x.surd_part())}, {"m", big(x.radicand())}};
}

inline QuadraticSurd surd(const json& j) {
    return QuadraticSurd(rational(field(j, "p")), rational(field(j, "q")), big(field(j, "m"), "m"));
}

inline json element(const KElement& x) { return {{"a", big(x.a())}, {"b", big(x.b())}, {"c", big(x.c())}}; }

inline KElement element(const QuadField& f, const json& j) {
    return KElement(f, big(field(j, "a"), "a"), big(field(j, "b"), "b"), big(field(j, "c"), "c"));
}

inline json sset(const SSet& s) {
    json out = json::array();
    for (long long p : s.primes()) out.push_back(p);
    return out;
}

inline SSet sset(const json& j) {
    std::vector<long long> ps;
    for (const auto& e : array(j, "s")) ps.push_back(small(e, "s entry"));
    std::sort(ps.begin(), ps.end());
    return SSet(std::move(ps));
}

inline json gap(const Gap& g) { return {{"lo", surd_value(g.lo)}, {"hi", surd_value(g.hi)}}; }

inline json gap_line(const GapLineCert& line) {
    json pieces = json::array();
    for (const auto& pc : line.pieces) {
        pieces.push_back({{"alpha", element(pc.alpha)},
                          {"bound", {{"x2", rational(pc.bound.x2)}, {"x1", rational(pc.bound.x1)},
                                     {"x0", rational(pc.bound.x0)}}},
                          {"lo", surd(pc.lo)},
                          {"hi", surd(pc.hi)},
                          {"lo_open", pc.lo_open},
                          {"hi_open", pc.hi_open}});
    }
    json points = json::array();
    for (const auto& pt : line.points) points.push_back({{"x", rational(pt.x)}, {"alpha", element(pt.alpha)}});
    return {{"y0", rational(line.y0)}, {"pieces", pieces}, {"points", points}};
}

inline GapLineCert gap_line(const QuadField& f, const json& j) {
    GapLineCert line{rational(field(j, "y0")), {}, {}};
    for (const auto& pc : array(field(j, "pieces"), "pieces")) {
        const json& b = field(pc, "bound");
        line.pieces.push_back(GapPiece{element(f, field(pc, "alpha")),
                                       QuadPoly{rational(field(b, "x2")), rational(field(b, "x1")),
                                                rational(field(b, "x0"))},
                                       surd(field(pc, "lo")), surd(field(pc, "hi")),
                                       flag(field(pc, "lo_open"), "lo_open"), flag(field(pc, "hi_open"), "hi_open")});
    }
    for (const auto& pt : array(field(j, "points"), "points"))
        line.points.push_back(GapPoint{rational(field(pt, "x")), element(f, field(pt, "alpha"))});
    return line;
}

}  // namespace io

inline const char* certificate_kind(const AnyCertificate& cert) {
    struct {
        const char* operator()(const std::monostate&) const { return "none"; }
        const char* operator()(const CoverCertificate&) const { return "cover"; }
        const char* operator()(const DiskCertificate&) const { return "disk"; }
        const char* operator()(const ExceptionalBundle&) const { return "exceptional-bundle"; }
        const char* operator()(const WitnessCertificate&) const { return "witness"; }
    } visitor;
    return std::visit(visitor, cert);
}

inline json payload_json(const CoverCertificate& c) {
    json chain = json::array();
    for (const auto& [j, k] : c.chain) chain.push_back({{"j", io::big(j)}, {"k", io::big(k)}});
    return {{"chain", chain}, {"k_max", io::big(c.k_max)}, {"x_bound", io::big(c.x_bound)}};
}

inline json payload_json(const DiskCertificate& c) {
    json disks = json::array();
    for (const auto& dk : c.disks) {
        json e = io::element(dk.center);
        e["boosted"] = dk.boosted;
        e["r_squared"] = io::rational(dk.r_squared);
        disks.push_back(e);
    }
    return {{"disks", disks}, {"subdivision_depth", c.subdivision_depth}, {"adaptive_depth", c.adaptive_depth}};
}

inline json payload_json(const ExceptionalBundle& b) {
    json gaps = json::array();
    for (const auto& g : b.gaps) gaps.push_back(io::gap(g));
    json lines = json::array();
    for (const auto& l : b.lines) lines.push_back(io::gap_line(l));
    return {{"p", b.p}, {"k_max", io::big(b.k_max)}, {"gaps", gaps}, {"lines", lines}};
}

inline json payload_json(const WitnessCertificate& w) {
    return {{"p", w.p},
            {"xi0", io::element(w.xi0)},
            {"case_tag", to_string(w.case_tag)},
            {"bound", io::rational(w.bound)},
            {"threshold_ok", w.threshold_ok}};
}

/// Canonical form: no metadata, keys sorted, so equal certificates give equal bytes.
inline json to_json(const AnyCertificate& cert) {
    if (std::holds_alternative<std::monostate>(cert)) throw std::invalid_argument("no certificate to serialize");
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = certificate_kind(cert);
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (!std::is_same_v<T, std::monostate>) {
                out["d"] = io::big(c.d);
                if constexpr (std::is_same_v<T, ExceptionalBundle>) {
                    out["s"] = io::sset(c.s());
                } else if constexpr (std::is_same_v<T, WitnessCertificate>) {
                    out["s"] = io::sset(SSet{c.p});
                } else {
                    out["s"] = io::sset(c.s);
                }
                out["payload"] = payload_json(c);
            }
        },
        cert);
    return out;
}

inline std::string canonical_string(const AnyCertificate& cert) { return to_json(cert).dump(2) + "\n"; }

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Canonical form plus a metadata block, as written to disk.
inline std::string file_string(const AnyCertificate& cert, const std::string& timestamp = utc_timestamp()) {
    json out = to_json(cert);
    out["metadata"] = {{"tool_version", kToolVersion}, {"timestamp", timestamp}};
    return out.dump(2) + "\n";
}

inline AnyCertificate from_json(const json& j) {
    try {
        const std::string version = io::field(j, "schema_version").get<std::string>();
        if (version != kSchemaVersion) throw CertificateParseError("unsupported schema_version " + version);
        const std::string kind = io::field(j, "kind").get<std::string>();
        const BigInt d = io::big(io::field(j, "d"), "d");
        if (d < 1 || !squarefree(d)) throw CertificateParseError("d = " + d.str() + " is not a squarefree positive integer");
        const SSet s = io::sset(io::field(j, "s"));
        const json& body = io::field(j, "payload");
        const QuadField f(d);

        if (kind == "cover") {
            CoverCertificate c{d, s, io::big(io::field(body, "k_max"), "k_max"),
                               io::big(io::field(body, "x_bound"), "x_bound"), {}};
            for (const auto& e : io::array(io::field(body, "chain"), "chain"))
                c.chain.emplace_back(io::big(io::field(e, "j"), "j"), io::big(io::field(e, "k"), "k"));
            return c;
        }
        if (kind == "disk") {
            DiskCertificate c{d, s, {}, static_cast<int>(io::small(io::field(body, "subdivision_depth"), "subdivision_depth")),
                              static_cast<int>(io::small(io::field(body, "adaptive_depth"), "adaptive_depth"))};
            for (const auto& e : io::array(io::field(body, "disks"), "disks")) {
                c.disks.push_back(Disk{io::element(f, e), io::rational(io::field(e, "r_squared")),
                                       io::flag(io::field(e, "boosted"), "boosted")});
            }
            return c;
        }
        if (kind == "exceptional-bundle") {
            const long long p = io::small(io::field(body, "p"), "p");
            if (!(s == SSet{p})) throw CertificateParseError("bundle s must be [p]");
            ExceptionalBundle b{d, p, io::big(io::field(body, "k_max"), "k_max"), {}, {}};
            for (const auto& g : io::array(io::field(body, "gaps"), "gaps"))
                b.gaps.push_back(Gap{io::surd_value(io::field(g, "lo")), io::surd_value(io::field(g, "hi"))});
            for (const auto& l : io::array(io::field(body, "lines"), "lines")) b.lines.push_back(io::gap_line(f, l));
            return b;
        }
        if (kind == "witness") {
            const long long p = io::small(io::field(body, "p"), "p");
            if (!(s == SSet{p})) throw CertificateParseError("witness s must be [p]");
            auto tag = witness_case_from_string(io::field(body, "case_tag").get<std::string>());
            if (!tag) throw CertificateParseError("unknown case_tag");
            return WitnessCertificate{d, p, io::element(f, io::field(body, "xi0")), *tag,
                                      io::rational(io::field(body, "bound")),
                                      io::flag(io::field(body, "threshold_ok"), "threshold_ok")};
        }
        throw CertificateParseError("unknown kind '" + kind + "'");
    } catch (const CertificateParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw CertificateParseError(e.what());
    }
}

inline AnyCertificate parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CertificateParseError(std::string("not valid JSON: ") + e.what());
    }
    return from_json(j);
}

inline AnyCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CertificateParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_certificate(buf.str());
}

struct VerifyReport {
    bool ok = false;
    std::string detail;
};

/// Re-runs the verifier matching the certificate kind, using only what the certificate holds.
inline VerifyReport verify_certificate(const AnyCertificate& cert) {
    VerifyReport rep;
    if (auto* c = std::get_if<CoverCertificate>(&cert)) {
        rep.ok = verify_cover_chain(QuadField(c->d), c->s, c->k_max, c->chain, &rep.detail);
    } else if (auto* c = std::get_if<DiskCertificate>(&cert)) {
        auto r = verify_disk_cert(*c);
        rep.ok = r.ok;
        rep.detail = r.detail;
    } else if (auto* c = std::get_if<ExceptionalBundle>(&cert)) {
        auto r = verify_bundle(*c);
        rep.ok = r.ok;
        rep.detail = r.detail;
    } else if (auto* c = std::get_if<WitnessCertificate>(&cert)) {
        rep.ok = verify_witness(*c, &rep.detail);
    } else {
        rep.detail = "empty certificate";
    }
    return rep;
}

}  // namespace seuclid
