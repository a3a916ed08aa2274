#include "ajima/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

#include "ajima/ajima.hpp"
#include "ajima/apollonius.hpp"
#include "ajima/verify.hpp"

namespace ajima {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct Box {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    void add(Point2 p) {
        x0 = std::min(x0, p.x), y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x), y1 = std::max(y1, p.y);
    }
    void add(const Circle2& c) {
        add(c.center - Point2{c.radius, c.radius});
        add(c.center + Point2{c.radius, c.radius});
    }
};

// points of the arc from B to C through the inner midpoint
std::vector<Point2> arc_points(const ArcGeometry& arc, Point2 B, Point2 C) {
    Point2 O = arc.O;
    double a0 = std::atan2(B.y - O.y, B.x - O.x);
    double a1 = std::atan2(C.y - O.y, C.x - O.x);
    Point2 mid = O + arc.normal * arc.R_arc;
    double am = std::atan2(mid.y - O.y, mid.x - O.x);
    auto ccw = [](double from, double to) {
        double d = to - from;
        while (d < 0) d += 2 * kPi;
        while (d >= 2 * kPi) d -= 2 * kPi;
        return d;
    };
    double span = ccw(a0, a1);
    double dir = ccw(a0, am) <= span ? 1 : -1;
    if (dir < 0) span = 2 * kPi - span;
    std::vector<Point2> pts;
    const int n = 96;
    for (int i = 0; i <= n; ++i) {
        double a = a0 + dir * span * i / n;
        pts.push_back(O + Point2{std::cos(a), std::sin(a)} * arc.R_arc);
    }
    return pts;
}

class Doc {
public:
    explicit Doc(double px) : px_(px) {}

    void circle(const Circle2& c, const char* cls) {
        body_ << "    <circle class=\"" << cls << "\" cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y)
              << "\" r=\"" << num(c.radius) << "\"/>\n";
    }
    void poly(const std::vector<Point2>& pts, const char* cls, bool closed) {
        body_ << "    <path class=\"" << cls << "\" d=\"";
        for (size_t i = 0; i < pts.size(); ++i)
            body_ << (i ? " L" : "M") << num(pts[i].x) << " " << num(pts[i].y);
        if (closed) body_ << " Z";
        body_ << "\"/>\n";
    }
    void point(Point2 p, const std::string& label, const char* cls = "pt") {
        double r = (label.empty() ? 2 : 3) / px_;
        body_ << "    <circle class=\"" << cls << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\""
              << num(r) << "\"/>\n";
        if (label.empty()) return;
        // undo the y flip so the text reads upright
        body_ << "    <text x=\"0\" y=\"0\" transform=\"translate(" << num(p.x + 4 / px_) << " "
              << num(p.y + 4 / px_) << ") scale(" << num(1 / px_) << " " << num(-1 / px_) << ")\">" << label
              << "</text>\n";
    }
    void open(const char* id) { body_ << "  <g id=\"" << id << "\">\n"; }
    void close() { body_ << "  </g>\n"; }
    void comment(const std::string& s) { body_ << "    <!-- " << s << " -->\n"; }

    std::string finish(const Box& b) const {
        double pad = 0.08 * std::max(b.x1 - b.x0, b.y1 - b.y0);
        double w = (b.x1 - b.x0 + 2 * pad) * px_, h = (b.y1 - b.y0 + 2 * pad) * px_;
        std::ostringstream o;
        o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\""
          << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
          << "  <style>\n"
          << "    path, circle { fill: none; stroke-width: " << num(1.2 / px_) << "; }\n"
          << "    .tri { stroke: #000; }\n    .arc { stroke: #1f5fbf; }\n    .gamma { stroke: #c0392b; }\n"
          << "    .inner { stroke: #27ae60; }\n    .outer { stroke: #8e44ad; }\n"
          << "    .soddy { stroke: #555; stroke-dasharray: " << num(4 / px_) << " " << num(3 / px_) << "; }\n"
          << "    .pt { fill: #000; stroke: none; }\n    .wit { fill: #e67e22; stroke: none; }\n"
          << "    text { font-family: sans-serif; font-size: 12px; }\n"
          << "  </style>\n"
          << "  <g transform=\"translate(" << num((pad - b.x0) * px_) << " " << num((b.y1 + pad) * px_)
          << ") scale(" << num(px_) << " " << num(-px_) << ")\">\n"
          << body_.str() << "  </g>\n</svg>\n";
        return o.str();
    }

private:
    double px_;
    std::ostringstream body_;
};

const char* kVertexName[3] = {"A", "B", "C"};

}  // namespace

std::string render_figure(const Triangle& t, const std::array<double, 3>& theta, const FigureOptions& opt) {
    std::array<ArcGeometry, 3> arcs;
    for (int k = 0; k < 3; ++k) arcs[k] = build_arc(t, k, theta[k]);
    std::array<std::optional<AjimaConfiguration>, 3> cfg;
    for (int k = 0; k < 3; ++k) {
        try {
            cfg[k] = build_gamma(t, arcs[k]);
        } catch (const GeometryError&) {
        }
    }

    Doc doc(opt.px_per_unit);
    Box box;
    for (int k = 0; k < 3; ++k) box.add(t.vertex(k));

    doc.open("triangle");
    doc.poly({t.A, t.B, t.C}, "tri", true);
    for (int k = 0; k < 3; ++k) doc.point(t.vertex(k), kVertexName[k]);
    Point2 I = incenter(t);
    doc.point(I, "I");
    doc.close();

    doc.open("arcs");
    for (int k = 0; k < 3; ++k) {
        Triangle loc = t.rotated(k);
        auto pts = arc_points(arcs[k], loc.B, loc.C);
        for (Point2 p : pts) box.add(p);
        doc.poly(pts, "arc", false);
    }
    doc.close();

    doc.open("gamma");
    for (int k = 0; k < 3; ++k) {
        if (!cfg[k]) {
            doc.comment(std::string("no inscribed circle at ") + kVertexName[k]);
            continue;
        }
        doc.circle(cfg[k]->gamma, "gamma");
        doc.point(cfg[k]->T, std::string("T") + static_cast<char>('a' + k));
    }
    doc.close();

    bool full = cfg[0] && cfg[1] && cfg[2];
    std::optional<Circle2> inner, outer;
    if ((opt.apollonius || opt.soddy) && full) {
        bool equal = theta[0] == theta[1] && theta[1] == theta[2];
        try {
            if (equal) {
                Triad tr = build_triad(t, theta[0]);
                ApolloniusResult res = apollonius(t, tr);
                inner = res.inner.circle;
                outer = res.outer.circle;
            } else {
                const Circle2 &g0 = cfg[0]->gamma, &g1 = cfg[1]->gamma, &g2 = cfg[2]->gamma;
                inner = generic_apollonius_oracle(g0, g1, g2, ApolloniusFamily::Inner).circle;
                outer = generic_apollonius_oracle(g0, g1, g2, ApolloniusFamily::Outer).circle;
            }
        } catch (const GeometryError&) {
        }
    }

    if (opt.apollonius) {
        doc.open("apollonius");
        if (inner && outer) {
            doc.circle(*inner, "inner");
            doc.circle(*outer, "outer");
            box.add(*outer);
        } else {
            doc.comment("Apollonius circles need all three inscribed circles");
        }
        doc.close();
    }

    if (opt.soddy) {
        doc.open("soddy");
        Point2 Ge = gergonne_point(t);
        if (inner && outer) {
            Point2 U = inner->center, V = outer->center;
            std::vector<Point2> ends{Ge, I, U, V};
            // span the four points along the line
            Point2 d = dist(Ge, I) > 1e-12 * t.scale() ? unit(I - Ge) : Point2{1, 0};
            double lo = 0, hi = 0;
            for (Point2 p : ends) lo = std::min(lo, dot(p - Ge, d)), hi = std::max(hi, dot(p - Ge, d));
            doc.poly({Ge + d * lo, Ge + d * hi}, "soddy", false);
            doc.point(U, "U");
            doc.point(V, "V");
            box.add(U);
            box.add(V);
        }
        doc.point(Ge, "Ge");
        doc.close();
    }

    if (opt.witness) {
        doc.open("registry-witness");
        if (theta[0] == theta[1] && theta[1] == theta[2]) {
            std::map<std::string, Point2> seen;
            for (const auto& r : run_checks(opt.witness_checks, t, theta[0])) {
                if (r.verdict == Outcome::NotApplicable) continue;
                for (const auto& [name, p] : r.witness) {
                    if (!p.finite()) continue;
                    std::string key = r.check_id.substr(0, r.check_id.find('_')) + ":" + name;
                    seen.emplace(key, p);
                }
            }
            for (const auto& [key, p] : seen) {
                if (std::abs(p.x) > 100 * t.scale() || std::abs(p.y) > 100 * t.scale()) continue;
                doc.point(p, "", "wit");
                doc.comment(key);
            }
        } else {
            doc.comment("registry witnesses need equal theta");
        }
        doc.close();
    }
    return doc.finish(box);
}

}  // namespace ajima
