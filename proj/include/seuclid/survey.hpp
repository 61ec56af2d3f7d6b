#pragma once

#include "seuclid/covering.hpp"
#include "seuclid/exceptional.hpp"
#include "seuclid/witness.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace seuclid {

enum class Verdict {
    EuclideanCover,
    EuclideanExceptional,
    NonEuclidean,
    NotApplicable,
    Unknown,
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::EuclideanCover: return "Euclidean(cover)";
        case Verdict::EuclideanExceptional: return "Euclidean(exceptional)";
        case Verdict::NonEuclidean: return "NonEuclidean(witness)";
        case Verdict::NotApplicable: return "NotApplicable";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

inline bool is_euclidean(Verdict v) { return v == Verdict::EuclideanCover || v == Verdict::EuclideanExceptional; }

using AnyCertificate =
    std::variant<std::monostate, CoverCertificate, DiskCertificate, ExceptionalBundle, WitnessCertificate>;

struct CheckResult {
    BigInt d;
    SSet s;
    Verdict verdict = Verdict::Unknown;
    AnyCertificate certificate;
    std::string note;
};

/// Full decision pipeline for one (d, S): covering first, then for S = {p} the built-in
/// exceptional certificates, then the witness argument.
inline CheckResult check(const BigInt& d, const SSet& s, std::optional<BigInt> k_cap = std::nullopt) {
    const QuadField field(d);
    CheckResult out{d, s, Verdict::Unknown, std::monostate{}, {}};
    auto cover = certify_euclidean(field, s, k_cap);
    if (auto* cert = std::get_if<CoverCertificate>(&cover)) {
        out.verdict = Verdict::EuclideanCover;
        out.note = "intervals with k <= " + cert->k_max.str() + " cover [0,1]";
        out.certificate = *cert;
        return out;
    }
    out.note = std::get<Inconclusive>(cover).reason;
    if (s.size() != 1) return out;
    const long long p = s.primes().front();

    auto exceptional = certify_exceptional(d, p);
    if (auto* disks = std::get_if<DiskCertificate>(&exceptional)) {
        out.verdict = Verdict::EuclideanExceptional;
        out.note = std::to_string(disks->disks.size()) + " disks cover F";
        out.certificate = *disks;
        return out;
    }
    if (auto* bundle = std::get_if<ExceptionalBundle>(&exceptional)) {
        out.verdict = Verdict::EuclideanExceptional;
        out.note = "residual traps only the gap lines, which are covered";
        out.certificate = *bundle;
        return out;
    }

    auto witness = certify_non_euclidean(field, p);
    if (auto* w = std::get_if<WitnessCertificate>(&witness)) {
        out.verdict = Verdict::NonEuclidean;
        out.note = "N_S(" + w->xi0.str() + " - alpha) >= " + w->bound.str() + " for all alpha";
        out.certificate = *w;
    } else if (auto* na = std::get_if<NotApplicable>(&witness)) {
        out.verdict = Verdict::NotApplicable;
        out.note = na->reason;
    } else {
        out.note += "; " + std::get<Inconclusive>(witness).reason;
    }
    return out;
}

/// Squarefree d in [1, d_max], ascending.
inline std::vector<BigInt> squarefree_upto(long long d_max) {
    std::vector<BigInt> out;
    for (long long d = 1; d <= d_max; ++d) {
        if (squarefree(BigInt(d))) out.emplace_back(d);
    }
    return out;
}

/// Checks every squarefree d <= d_max. Work is spread over threads; rows come back
/// ordered by d.
inline std::vector<CheckResult> survey(const SSet& s, long long d_max, unsigned workers = 0) {
    const std::vector<BigInt> ds = squarefree_upto(d_max);
    std::vector<std::optional<CheckResult>> rows(ds.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(1, ds.size()));
    std::atomic<std::size_t> cursor{0};
    auto run = [&] {
        for (std::size_t i; (i = cursor++) < ds.size();) rows[i] = check(ds[i], s);
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
    }
    std::vector<CheckResult> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(*r));
    return out;
}

inline std::vector<BigInt> euclidean_list(const std::vector<CheckResult>& rows) {
    std::vector<BigInt> out;
    for (const auto& r : rows) {
        if (is_euclidean(r.verdict)) out.push_back(r.d);
    }
    return out;
}

}  // namespace seuclid
