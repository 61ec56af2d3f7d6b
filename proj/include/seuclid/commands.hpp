#pragma once

#include "seuclid/render.hpp"
#include "seuclid/serialize.hpp"
#include "seuclid/survey.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace seuclid::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kUnknown = 2,
    kVerifyFailed = 3,
};

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline BigInt parse_d(const std::string& text) {
    BigInt d;
    try {
        d = parse_bigint(text);
    } catch (const std::invalid_argument&) {
        throw InputError("d must be a positive integer, got '" + text + "'");
    }
    if (d < 1) throw InputError("d must be positive, got " + d.str());
    if (!squarefree(d)) throw InputError("d = " + d.str() + " is not squarefree");
    return d;
}

/// "2,3,5"; an empty list, "none" or "{}" is the empty set.
inline SSet parse_s(const std::string& text) {
    std::string body = text;
    if (body == "none" || body == "{}" || body == "[]") body.clear();
    std::vector<long long> ps;
    std::stringstream in(body);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty()) throw InputError("empty entry in S list '" + text + "'");
        BigInt p;
        try {
            p = parse_bigint(item);
        } catch (const std::invalid_argument&) {
            throw InputError("'" + item + "' is not an integer");
        }
        if (p < 2 || p > BigInt(1'000'000'000LL) || !is_prime(p)) throw InputError(item + " is not a prime");
        ps.push_back(static_cast<long long>(p));
    }
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) throw InputError("S lists a prime twice");
    return SSet(std::move(ps));
}

inline long long parse_prime(const std::string& text) {
    SSet s = parse_s(text);
    if (s.size() != 1) throw InputError("expected a single prime, got '" + text + "'");
    return s.primes().front();
}

inline int exit_for(Verdict v) {
    return v == Verdict::Unknown || v == Verdict::NotApplicable ? kUnknown : kOk;
}

inline void describe(std::ostream& out, const CheckResult& r) {
    out << "d = " << r.d << ", S = " << r.s.str() << ": " << to_string(r.verdict) << "\n";
    if (auto* c = std::get_if<CoverCertificate>(&r.certificate)) {
        out << "  minimal k_max = " << c->k_max << " (search bound X = " << c->x_bound << ")\n";
        out << "  chain:";
        for (const auto& [j, k] : c->chain) out << " I_" << j << "^" << k;
        out << "\n";
    } else if (auto* c = std::get_if<DiskCertificate>(&r.certificate)) {
        out << "  " << c->disks.size() << " disks verified on a " << c->subdivision_depth << "x"
            << c->subdivision_depth << " grid\n";
    } else if (auto* c = std::get_if<ExceptionalBundle>(&r.certificate)) {
        out << "  residual at k_max = " << c->k_max << " has " << c->gaps.size() << " gap(s); lines y =";
        for (const auto& l : c->lines) out << " " << l.y0;
        out << "\n";
    } else if (auto* c = std::get_if<WitnessCertificate>(&r.certificate)) {
        out << "  witness xi0 = " << c->xi0.str() << ", case " << to_string(c->case_tag) << ", bound " << c->bound
            << "\n";
    }
    if (!r.note.empty()) out << "  " << r.note << "\n";
}

inline bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    f << text;
    return static_cast<bool>(f);
}

inline int cmd_check(const std::string& d_text, const std::string& s_text, std::optional<std::string> kmax_text,
                     std::optional<std::string> cert_path, std::ostream& out, std::ostream& err) {
    try {
        const BigInt d = parse_d(d_text);
        const SSet s = parse_s(s_text);
        std::optional<BigInt> cap;
        if (kmax_text) {
            try {
                cap = parse_bigint(*kmax_text);
            } catch (const std::invalid_argument&) {
                throw InputError("--kmax must be an integer");
            }
            if (*cap < 1) throw InputError("--kmax must be positive");
        }
        CheckResult r = check(d, s, cap);
        describe(out, r);
        if (cert_path) {
            if (std::holds_alternative<std::monostate>(r.certificate)) {
                err << "no certificate to write\n";
            } else if (!write_file(*cert_path, file_string(r.certificate), err)) {
                return kInputError;
            }
        }
        return exit_for(r.verdict);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

inline json table_json(const SSet& s, long long d_max, const std::vector<CheckResult>& rows) {
    json list = json::array();
    json euclid = json::array();
    for (const auto& r : rows) {
        json row{{"d", io::big(r.d)}, {"verdict", to_string(r.verdict)}};
        if (!std::holds_alternative<std::monostate>(r.certificate)) row["certificate"] = certificate_kind(r.certificate);
        if (auto* c = std::get_if<CoverCertificate>(&r.certificate)) row["k_max"] = io::big(c->k_max);
        list.push_back(row);
        if (is_euclidean(r.verdict)) euclid.push_back(io::big(r.d));
    }
    return {{"s", io::sset(s)}, {"d_max", d_max}, {"rows", list}, {"euclidean", euclid}};
}

inline int cmd_table(const std::string& s_text, long long d_max, const std::string& format, std::ostream& out,
                     std::ostream& err, unsigned workers = 0) {
    try {
        const SSet s = parse_s(s_text);
        if (d_max < 1) throw InputError("--dmax must be at least 1");
        if (format != "text" && format != "json") throw InputError("--format must be text or json");
        const auto rows = survey(s, d_max, workers);
        if (format == "json") {
            out << table_json(s, d_max, rows).dump(2) << "\n";
            return kOk;
        }
        out << "S = " << s.str() << ", squarefree d <= " << d_max << "\n";
        for (const auto& r : rows) {
            out << "  " << r.d << "\t" << to_string(r.verdict);
            if (auto* c = std::get_if<CoverCertificate>(&r.certificate)) out << "\tk_max=" << c->k_max;
            out << "\n";
        }
        out << "Euclidean:";
        bool first = true;
        for (const auto& d : euclidean_list(rows)) {
            out << (first ? " " : ", ") << d;
            first = false;
        }
        out << "\n";
        return kOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

inline int cmd_render(const std::string& d_text, const std::string& s_text, const std::string& path, std::ostream& out,
                      std::ostream& err) {
    try {
        const BigInt d = parse_d(d_text);
        const SSet s = parse_s(s_text);
        CheckResult r = check(d, s);
        if (std::holds_alternative<std::monostate>(r.certificate)) {
            err << "error: no certificate for d = " << d << ", S = " << s.str() << " (" << to_string(r.verdict)
                << "); nothing to render\n";
            return kUnknown;
        }
        if (!write_file(path, render_svg(r.certificate), err)) return kInputError;
        out << "wrote " << path << " (" << certificate_kind(r.certificate) << ")\n";
        return kOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

inline int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    AnyCertificate cert;
    try {
        cert = load_certificate(path);
    } catch (const CertificateParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    VerifyReport rep = verify_certificate(cert);
    if (!rep.ok) {
        out << "INVALID " << certificate_kind(cert) << " certificate: " << rep.detail << "\n";
        return kVerifyFailed;
    }
    out << "valid " << certificate_kind(cert) << " certificate\n";
    return kOk;
}

/// The analysed witness when the case analysis applies, otherwise the default candidate.
inline KElement default_witness(const QuadField& f, long long p) {
    if (auto w = witness_analysis(f, p)) return w->xi0;
    return p == 2 ? KElement(f, 1, 1, 3) : KElement(f, 1, 1, 2);
}

inline int cmd_oracle(const std::string& d_text, const std::string& p_text, long long n_max, long long coeff_max,
                      std::ostream& out, std::ostream& err) {
    try {
        const BigInt d = parse_d(d_text);
        const long long p = parse_prime(p_text);
        if (n_max < 0 || coeff_max < 1) throw InputError("--nmax must be >= 0 and --coeff >= 1");
        const QuadField f(d);
        const KElement xi0 = default_witness(f, p);
        OracleReport rep = oracle_min_snorm(f, p, xi0, n_max, coeff_max);
        out << "d = " << d << ", p = " << p << ", xi0 = " << xi0.str() << "\n";
        out << "  grid: alpha = (a + b w)/" << p << "^n, n <= " << n_max << ", |a|,|b| <= " << coeff_max << "\n";
        out << "  min N_S(xi0 - alpha) = " << rep.min_snorm << " at alpha = " << rep.argmin.str() << "\n";
        if (auto w = witness_analysis(f, p)) out << "  analytic lower bound " << w->bound << "\n";
        return kOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace seuclid::cli
