#pragma once

// Rendering is the one place that converts exact values to doubles; nothing here feeds
// back into a verdict.

#include "seuclid/survey.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace seuclid {

namespace svg {

inline constexpr double kScale = 200.0;

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& q) { return to_double(q.num()) / to_double(q.den()); }

inline double to_double(const SurdValue& v) {
    return (to_double(v.j) + v.s * std::sqrt(3.0 / to_double(v.D))) / to_double(v.k);
}

inline double to_double(const QuadraticSurd& x) {
    return to_double(x.rational_part()) + to_double(x.surd_part()) * std::sqrt(to_double(x.radicand()));
}

struct Point {
    double x, y;
};

/// Plane position of the basis point u + v w.
inline Point plane(const QuadField& f, double u, double v) {
    const double im = std::sqrt(to_double(f.D())) / 2.0;
    return {u + (f.half_integer() ? v / 2.0 : 0.0), v * im};
}

inline Point plane(const KElement& x) { return plane(x.field(), to_double(x.u()), to_double(x.v())); }

inline std::string num(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << x * kScale;
    std::string s = out.str();
    return s == "-0.000" ? "0.000" : s;
}

class Document {
public:
    explicit Document(const QuadField& f) : field_(f) {
        far_ = plane(f, 1.0, 1.0);
    }

    void polygon(const std::vector<Point>& pts, const std::string& cls) {
        body_ << "    <polygon class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << num(pts[i].x) << "," << num(pts[i].y);
        body_ << "\"/>\n";
    }

    void circle(Point c, double r, const std::string& cls, const std::string& title) {
        body_ << "    <circle class=\"" << cls << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
              << "\"><title>" << title << "</title></circle>\n";
    }

    void line(Point a, Point b, const std::string& cls, const std::string& title) {
        body_ << "    <line class=\"" << cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
              << "\" y2=\"" << num(b.y) << "\"><title>" << title << "</title></line>\n";
    }

    /// Horizontal band of basis heights lo < v < hi, clipped to the F bounding box in x.
    void band(double lo, double hi, const std::string& cls, const std::string& title) {
        const Point a = plane(field_, 0.0, lo), b = plane(field_, 0.0, hi);
        const double left = -0.25, right = far_.x + 0.25;
        body_ << "    <rect class=\"" << cls << "\" x=\"" << num(left) << "\" y=\"" << num(a.y) << "\" width=\""
              << num(right - left) << "\" height=\"" << num(b.y - a.y) << "\"><title>" << title
              << "</title></rect>\n";
    }

    std::string str(const std::string& caption) const {
        std::ostringstream out;
        const double pad = 1.0;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(-pad) << " " << num(-pad) << " "
            << num(far_.x + 2 * pad) << " " << num(far_.y + 2 * pad) << "\">\n";
        out << "  <title>" << caption << "</title>\n";
        out << "  <style>\n"
               "    .fundamental-domain { fill: none; stroke: #000; stroke-width: 2; }\n"
               "    .strip { fill: #4a7ab5; fill-opacity: 0.12; stroke: none; }\n"
               "    .disk { fill: #d9822b; fill-opacity: 0.15; stroke: #d9822b; stroke-width: 1; }\n"
               "    .disk.boosted { stroke: #a8341f; stroke-dasharray: 6 3; }\n"
               "    .gap { fill: #c00; fill-opacity: 0.4; stroke: none; }\n"
               "    .gap-line { stroke: #c00; stroke-width: 2; }\n"
               "    .witness { fill: #c00; stroke: none; }\n"
               "  </style>\n";
        // user units: 1 = 200, origin at the lower-left corner of F, y pointing up
        out << "  <g transform=\"translate(0," << num(far_.y) << ") scale(1,-1)\">\n";
        out << body_.str();
        out << "  </g>\n</svg>\n";
        return out.str();
    }

    const QuadField& field() const { return field_; }

private:
    QuadField field_;
    Point far_{};
    std::ostringstream body_;
};

inline void draw_domain(Document& doc) {
    const QuadField& f = doc.field();
    doc.polygon({plane(f, 0, 0), plane(f, 1, 0), plane(f, 1, 1), plane(f, 0, 1)}, "fundamental-domain");
}

inline void draw_cover(Document& doc, const CoverCertificate& cert) {
    const QuadField& f = doc.field();
    for (const auto& iv : intervals(f, cert.s, cert.k_max)) {
        const std::string tag = "I_" + iv.j.str() + "^" + iv.k.str();
        doc.band(to_double(iv.lo), to_double(iv.hi), "strip", tag);
    }
    // the disks B_{1/k}((i + j w)/k) whose union contains each strip over F
    for (const auto& iv : intervals(f, cert.s, cert.k_max)) {
        const double k = to_double(iv.k);
        for (BigInt i = -1; i <= iv.k + 1; ++i) {
            KElement centre(f, i, iv.j, iv.k);
            doc.circle(plane(centre), 1.0 / k, "disk", centre.str());
        }
    }
}

inline void draw_disks(Document& doc, const DiskCertificate& cert) {
    for (const auto& dk : cert.disks) {
        doc.circle(plane(dk.center), std::sqrt(to_double(dk.r_squared)), dk.boosted ? "disk boosted" : "disk",
                   dk.center.str() + ", r^2 = " + dk.r_squared.str());
    }
}

inline void draw_bundle(Document& doc, const ExceptionalBundle& bundle) {
    const QuadField& f = doc.field();
    for (const auto& g : bundle.gaps) doc.band(to_double(g.lo), to_double(g.hi), "gap", "gap " + g.lo.str());
    for (const auto& l : bundle.lines) {
        const double y = to_double(l.y0);
        doc.line(plane(f, 0, y), plane(f, 1, y), "gap-line", "y = " + l.y0.str());
        for (const auto& pc : l.pieces) {
            doc.circle(plane(pc.alpha), 1.0 / to_double(pc.alpha.c()), "disk", pc.alpha.str());
        }
    }
}

inline void draw_witness(Document& doc, const WitnessCertificate& w) {
    doc.circle(plane(w.xi0), 0.02, "witness", "xi0 = " + w.xi0.str() + ", bound " + w.bound.str());
}

}  // namespace svg

/// SVG figure for a certificate: F, then its strips, disks, gap lines or witness point.
inline std::string render_svg(const AnyCertificate& cert) {
    if (std::holds_alternative<std::monostate>(cert)) throw std::invalid_argument("render: no certificate");
    BigInt d;
    std::visit(
        [&](const auto& c) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(c)>, std::monostate>) d = c.d;
        },
        cert);
    const QuadField f(d);
    svg::Document doc(f);
    std::string caption = "Q(sqrt(-" + d.str() + "))";
    if (auto* c = std::get_if<CoverCertificate>(&cert)) {
        svg::draw_cover(doc, *c);
        caption += ", S = " + c->s.str() + ", strips with k <= " + c->k_max.str();
    } else if (auto* c = std::get_if<DiskCertificate>(&cert)) {
        svg::draw_disks(doc, *c);
        caption += ", S = " + c->s.str() + ", " + std::to_string(c->disks.size()) + " disks";
    } else if (auto* c = std::get_if<ExceptionalBundle>(&cert)) {
        svg::draw_bundle(doc, *c);
        caption += ", S = {" + std::to_string(c->p) + "}, gap lines";
    } else if (auto* c = std::get_if<WitnessCertificate>(&cert)) {
        svg::draw_witness(doc, *c);
        caption += ", S = {" + std::to_string(c->p) + "}, witness " + c->xi0.str();
    }
    svg::draw_domain(doc);
    return doc.str(caption);
}

}  // namespace seuclid
