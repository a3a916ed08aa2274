#include "ajima/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "ajima/ajima.hpp"
#include "ajima/apollonius.hpp"
#include "ajima/identities.hpp"

namespace ajima {

double SamplePolicy::threshold_for(const std::string& id) const {
    auto it = overrides.find(id);
    return it == overrides.end() ? threshold : it->second;
}

// ---------------------------------------------------------------- sampling

namespace {

double max_angle_deg(const TriangleMetrics& m) {
    return rad2deg(std::max({m.angle(0), m.angle(1), m.angle(2)}));
}

}  // namespace

Sample draw_sample(const SamplePolicy& policy, long index) {
    Sample s;
    s.desc.seed = policy.seed;
    s.desc.index = index;
    if (policy.sides) {
        s.tri = Triangle::from_sides((*policy.sides)[0], (*policy.sides)[1], (*policy.sides)[2]);
        double th = policy.theta.value_or(180);
        s.desc.sides = *policy.sides;
        s.desc.theta = {th, th, th};
        return s;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(policy.seed), static_cast<std::uint32_t>(policy.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> side(0.0, 1.0);
    for (;;) {
        std::array<double, 3> x{side(rng), side(rng), side(rng)};
        double lo = std::min({x[0], x[1], x[2]}), hi = std::max({x[0], x[1], x[2]});
        if (lo <= 0 || hi / lo > policy.side_ratio_cap) continue;
        if (2 * hi >= x[0] + x[1] + x[2] - 1e-6 * hi) continue;
        // unit longest side keeps the report readable
        for (double& v : x) v /= hi;
        Triangle t = Triangle::from_sides(x[0], x[1], x[2]);
        double th_hi = policy.theta_hi;
        if (policy.constraint == SampleConstraint::Interior)
            th_hi = std::min(th_hi, 2 * (180 - max_angle_deg(metrics(t))));
        double th;
        if (policy.theta) {
            th = *policy.theta;
            if (policy.constraint == SampleConstraint::Interior && th >= th_hi) continue;
        } else {
            if (th_hi - policy.theta_lo < 1e-6) continue;
            th = std::uniform_real_distribution<double>(policy.theta_lo, th_hi)(rng);
        }
        s.tri = t;
        s.desc.sides = x;
        s.desc.theta = {th, th, th};
        return s;
    }
}

std::vector<Sample> draw_samples(const SamplePolicy& policy) {
    std::vector<Sample> out;
    long n = policy.sides ? 1 : std::max(0L, policy.trials);
    for (long i = 0; i < n; ++i) out.push_back(draw_sample(policy, i));
    return out;
}

// ---------------------------------------------------------------- context

namespace {

using Witness = std::vector<std::pair<std::string, Point2>>;

// thrown by a predicate whose validity condition fails for this configuration
struct Skip {
    std::string why;
};

struct Ctx {
    Triangle t;
    TriangleMetrics m;
    double theta = 0;
    double tparam = 0;
    Tolerance tol;
    double scale = 0;
    std::array<std::optional<AjimaConfiguration>, 3> cfg;
    std::array<std::string, 3> cfg_error;
    std::optional<Triad> triad;
    std::optional<ApolloniusResult> apo;
    std::string triad_error;
};

Ctx make_ctx(const Triangle& t, double theta, const Tolerance& tol) {
    Ctx c;
    c.t = t;
    c.m = metrics(t);  // DegenerateTriangle propagates
    c.theta = theta;
    c.tparam = std::tan(deg2rad(theta) / 4);
    c.tol = tol;
    c.scale = std::max({c.m.a, c.m.b, c.m.c});
    for (int k = 0; k < 3; ++k) {
        try {
            c.cfg[k] = build_gamma(t, build_arc(t, k, theta), tol);
        } catch (const GeometryError& e) {
            c.cfg_error[k] = e.what();
        }
    }
    try {
        c.triad = build_triad(t, theta, tol);
        c.apo = apollonius(t, *c.triad, tol);
    } catch (const GeometryError& e) {
        c.triad_error = e.what();
        c.apo.reset();
    }
    return c;
}

double concurrence(const Line2& l1, const Line2& l2, const Line2& l3, double s) {
    // homogeneous lines with unit normals; the determinant vanishes iff the lines share a
    // point, possibly at infinity, so nearly parallel triples stay well conditioned
    auto h = [&](const Line2& l) {
        Point2 n = perp(l.d);
        return std::array<double, 3>{n.x, n.y, -dot(n, l.p) / s};
    };
    auto a = h(l1), b = h(l2), c = h(l3);
    return std::abs(a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                    a[2] * (b[0] * c[1] - b[1] * c[0]));
}

double collinear(Point2 a, Point2 b, Point2 c, double s) { return is_collinear(a, b, c).residual / s; }
double concyclic(Point2 a, Point2 b, Point2 c, Point2 d, double s) {
    return is_concyclic(a, b, c, d).residual / s;
}
double parallel(Point2 a, Point2 b, Point2 c, Point2 d) {
    return is_parallel(Line2::through(a, b), Line2::through(c, d)).residual;
}
double perpendicular(Point2 a, Point2 b, Point2 c, Point2 d) {
    return is_perpendicular(Line2::through(a, b), Line2::through(c, d)).residual;
}
double ang(Point2 p, Point2 v, Point2 q) { return angle_at(p, v, q); }

// Below this fraction of the scale a ray or a line through two constructed points has no
// usable direction (rounding of 1e-16 turns into more than 1e-10 rad).
constexpr double kRayFloor = 1e-6;

struct Vertex {
    const AjimaConfiguration& c;
    const Ctx& ctx;
    int k;
    Witness& w;
    double s() const { return ctx.scale; }
    Point2 need(const std::optional<Point2>& p, const char* n) const { return c.need(p, n); }
    // L' with the line TL' well defined; the two merge at an isosceles apex
    Point2 lp_apart() const {
        Point2 Lp = c.need(c.Lp, "Lp");
        if (dist(Lp, c.T) < kRayFloor * s()) throw Skip{"T and L' nearly coincide"};
        return Lp;
    }
};

using VertexFn = std::function<double(Vertex&)>;
using SampleFn = std::function<double(const Ctx&, Witness&)>;

CheckResult finish(const std::string& id, double res, double thr, Witness w, std::string note = {}) {
    CheckResult r = judged(id, res, thr);
    r.witness = std::move(w);
    r.reason = std::move(note);
    return r;
}

CheckResult per_vertex(const Ctx& ctx, const std::string& id, double thr, const VertexFn& fn) {
    double worst = -1;
    Witness worst_w;
    std::string why;
    int skipped = 0;
    for (int k = 0; k < 3; ++k) {
        std::string reason;
        if (!ctx.cfg[k]) {
            reason = ctx.cfg_error[k];
        } else {
            Witness w;
            Vertex v{*ctx.cfg[k], ctx, k, w};
            try {
                double r = fn(v);
                if (std::isnan(r) || r > worst) {
                    worst = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
                    worst_w = std::move(w);
                }
                continue;
            } catch (const GeometryError& e) {
                reason = e.what();
            } catch (const Skip& s) {
                reason = s.why;
            }
        }
        ++skipped;
        if (why.empty()) why = reason;
    }
    if (worst < 0) return not_applicable(id, why);
    return finish(id, worst, thr, std::move(worst_w),
                  skipped ? std::to_string(skipped) + " vertex(es) skipped: " + why : std::string{});
}

CheckResult on_sample(const Ctx& ctx, const std::string& id, double thr, const SampleFn& fn) {
    Witness w;
    try {
        double r = fn(ctx, w);
        if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
        return finish(id, r, thr, std::move(w));
    } catch (const GeometryError& e) {
        return not_applicable(id, e.what());
    } catch (const Skip& s) {
        return not_applicable(id, s.why);
    }
}

CheckResult on_triad(const Ctx& ctx, const std::string& id, double thr, const SampleFn& fn) {
    if (!ctx.apo) return not_applicable(id, ctx.triad_error);
    return on_sample(ctx, id, thr, fn);
}

// ---------------------------------------------------------------- incircle / arc checks

double suppa_aux(const AjimaConfiguration& c, double turn) {
    // a second circle externally tangent to omega, touching it away from T
    const ArcGeometry& arc = c.arc;
    Point2 v = c.T - arc.O;
    double cs = std::cos(turn), sn = std::sin(turn);
    Point2 tq = arc.O + Point2{v.x * cs - v.y * sn, v.x * sn + v.y * cs};
    double rq = 0.5 * arc.R_arc;
    Circle2 q{tq + unit(tq - arc.O) * rq, rq};
    double bu = std::sqrt(std::max(0.0, q.power(c.tri.B)));
    double cv = std::sqrt(std::max(0.0, q.power(c.tri.C)));
    return std::abs(bu * dist(c.tri.C, tq) - cv * dist(c.tri.B, tq));
}

Point2 kg_point(const AjimaConfiguration& c, Point2 Lp, double s) {
    auto k = intersect_lines(Line2::through(c.T, Lp), Line2::through(c.tri.B, c.tri.C));
    if (!k || dist(*k, c.Mid) > 1e6 * s) throw Skip{"TL' parallel to BC"};
    return *k;
}

struct Entry {
    std::string id;
    std::function<CheckResult(const Ctx&, const std::string&, double)> run;
};

Entry vertex_entry(std::string id, VertexFn fn) {
    return {std::move(id), [fn](const Ctx& c, const std::string& id, double thr) {
                return per_vertex(c, id, thr, fn);
            }};
}
Entry sample_entry(std::string id, SampleFn fn) {
    return {std::move(id), [fn](const Ctx& c, const std::string& id, double thr) {
                return on_sample(c, id, thr, fn);
            }};
}
Entry triad_entry(std::string id, SampleFn fn) {
    return {std::move(id), [fn](const Ctx& c, const std::string& id, double thr) {
                return on_triad(c, id, thr, fn);
            }};
}

void add_incircle_checks(std::vector<Entry>& R) {
    R.push_back(vertex_entry("P01_protasov", [](Vertex& v) {
        auto& c = v.c;
        v.w = {{"T", c.T}, {"I", c.I}};
        return std::abs(ang(c.tri.B, c.T, c.I) - ang(c.I, c.T, c.tri.C));
    }));
    R.push_back(vertex_entry("P02_tangent_ratio", [](Vertex& v) {
        auto& c = v.c;
        double s2 = v.s() * v.s();
        double own = std::abs(dist(c.tri.B, c.F_t) * dist(c.tri.C, c.T) - dist(c.tri.C, c.E) * dist(c.tri.B, c.T));
        double aux = std::max(suppa_aux(c, 0.3), suppa_aux(c, -0.3));
        v.w = {{"T", c.T}, {"F", c.F_t}, {"E", c.E}};
        return std::max(own, aux) / s2;
    }));
    R.push_back(vertex_entry("P03_result12", [](Vertex& v) {
        auto& c = v.c;
        Point2 Z = v.need(c.Z, "Z");
        v.w = {{"Z", Z}};
        return std::abs(dist(c.tri.B, c.F_t) * dist(c.tri.C, Z) - dist(c.tri.C, c.E) * dist(c.tri.B, Z)) /
               (v.s() * v.s());
    }));
    R.push_back(vertex_entry("P04_catalytic", [](Vertex& v) {
        auto& c = v.c;
        v.w = {{"E", c.E}, {"T", c.T}, {"I", c.I}, {"C", c.tri.C}};
        return concyclic(c.E, c.T, c.I, c.tri.C, v.s());
    }));
    R.push_back(vertex_entry("P05_result3", [](Vertex& v) {
        auto& c = v.c;
        return std::abs(ang(c.tri.B, c.T, c.tri.C) - 2 * ang(c.I, c.E, c.tri.C));
    }));
    R.push_back(vertex_entry("P06_thailand", [](Vertex& v) {
        auto& c = v.c;
        if (c.j_position != JPosition::Between) throw Skip{"J not between A and C"};
        Point2 J = *c.J;
        Point2 X = excenter(Triangle{c.tri.B, J, c.tri.C}, 2);
        v.w = {{"J", J}, {"X", X}, {"F", c.F_t}, {"E", c.E}};
        return collinear(X, c.F_t, c.E, v.s());
    }));
    R.push_back(vertex_entry("P07_rg13069", [](Vertex& v) {
        auto& c = v.c;
        v.w = {{"T", c.T}, {"I", c.I}, {"N", c.N}};
        return collinear(c.T, c.I, c.N, v.s());
    }));
    R.push_back(vertex_entry("P08_midarc", [](Vertex& v) {
        auto& c = v.c;
        return std::abs(ang(c.N, c.tri.B, c.tri.C) - ang(c.tri.B, c.tri.C, c.N));
    }));
    R.push_back(vertex_entry("P09_rg13164", [](Vertex& v) {
        auto& c = v.c;
        Point2 J = v.need(c.J, "J");
        if (dist(J, c.N) <= 1e-9 * v.s()) throw Skip{"J coincides with N"};
        return parallel(c.I, c.E, c.N, J);
    }));
    R.push_back(vertex_entry("P10_rg13066", [](Vertex& v) {
        auto& c = v.c;
        Point2 F = v.need(c.Fj, "Fj");
        v.w = {{"F", F}, {"I", c.I}, {"E", c.E}};
        return std::abs(dist(c.I, F) - dist(F, c.E)) / v.s();
    }));
    R.push_back(vertex_entry("P11_result8", [](Vertex& v) {
        auto& c = v.c;
        Point2 foot = Line2::through(c.tri.B, c.tri.C).project(c.T);
        return std::abs(ang(c.tri.B, c.T, foot) - ang(c.arc.O, c.T, c.tri.C));
    }));
    R.push_back(vertex_entry("P12_result6", [](Vertex& v) {
        auto& c = v.c;
        // the ray O->M points along the inward normal while theta < 180; past 180 O crosses BC,
        // so the normal is used throughout. The angle at T is taken between the lines TI and TO.
        double half = line_angle(Line2::through(c.T, c.I), Line2::through(c.T, c.arc.O));
        return std::abs(ang(c.arc.O + c.arc.normal, c.arc.O, c.T) - 2 * half);
    }));
    R.push_back(vertex_entry("P13_result9", [](Vertex& v) {
        auto& c = v.c;
        Point2 Tp = v.need(c.Tp, "Tp");
        v.w = {{"T'", Tp}, {"D", c.D}};
        return perpendicular(Tp, c.D, c.tri.B, c.tri.C);
    }));
    R.push_back(vertex_entry("P14_result10", [](Vertex& v) {
        auto& c = v.c;
        Point2 Tp = v.need(c.Tp, "Tp");
        return std::abs(ang(c.E, c.D, Tp) - ang(c.tri.A, c.tri.C, c.tri.B));
    }));
    R.push_back(vertex_entry("P15_result24", [](Vertex& v) {
        auto& c = v.c;
        Point2 Lp = v.need(c.Lp, "Lp");
        double res = perpendicular(c.D, Lp, c.tri.B, c.tri.C);
        // the statement holds for every circle inscribed in the angle, not only gamma
        Point2 A = c.tri.A;
        Point2 u = unit(c.I - A);
        double rq = 0.37 * c.m.r;
        Circle2 q{A + u * (rq / std::sin(c.m.angle(0) / 2)), rq};
        auto hits = intersect_line_circle(Line2::through(A, c.L), q);
        if (hits.size() == 2) {
            Point2 far = dist(hits[0], A) > dist(hits[1], A) ? hits[0] : hits[1];
            res = std::max(res, perpendicular(q.center, far, c.tri.B, c.tri.C));
        }
        return res;
    }));
    R.push_back(vertex_entry("P16_result27", [](Vertex& v) {
        auto& c = v.c;
        Point2 Lp = v.need(c.Lp, "Lp");
        Line2 tangent = Line2::from_dir(Lp, perp(Lp - c.D));
        return is_parallel(tangent, Line2::through(c.tri.B, c.tri.C)).residual;
    }));
    R.push_back(vertex_entry("P17_result25", [](Vertex& v) {
        auto& c = v.c;
        Point2 Y = v.need(c.Y, "Y"), Yp = v.need(c.Yp, "Yp"), Yf = v.need(c.Yp_far, "Yp_far");
        Point2 Lp = v.lp_apart();
        v.w = {{"Y", Y}, {"Y'", Yp}, {"L'", Lp}};
        return std::max({parallel(Y, Lp, Yp, c.L), parallel(Lp, c.T, c.L, Yf), parallel(Y, c.D, Yp, c.I)});
    }));
    R.push_back(vertex_entry("P18_result13", [](Vertex& v) {
        auto& c = v.c;
        Point2 X = v.need(c.X, "X"), Lp = v.lp_apart();
        Point2 A = c.tri.A;
        // the angle is measured toward the side of AL away from T
        bool t_on_b_side = cross(c.L - A, c.T - A) * cross(c.L - A, c.tri.B - A) > 0;
        Point2 far = t_on_b_side ? c.tri.C : c.tri.B;
        return std::abs(ang(X, c.T, Lp) - ang(X, c.L, far));
    }));
    R.push_back(vertex_entry("P19_result17", [](Vertex& v) {
        auto& c = v.c;
        Point2 X = v.need(c.X, "X"), Lp = v.lp_apart();
        Point2 K = kg_point(c, Lp, v.s());
        v.w = {{"X", X}, {"T", c.T}, {"L", c.L}, {"K", K}};
        return concyclic(X, c.T, c.L, K, v.s());
    }));
    R.push_back(vertex_entry("P20_ext_bisector", [](Vertex& v) {
        auto& c = v.c;
        Point2 Lp = v.lp_apart();
        Point2 sum = unit(c.tri.B - c.T) + unit(c.tri.C - c.T);
        if (norm(sum) < 1e-9) throw Skip{"T on segment BC"};
        return std::abs(dot(unit(Lp - c.T), sum)) / norm(sum);
    }));
    R.push_back(vertex_entry("P21_result18", [](Vertex& v) {
        auto& c = v.c;
        Point2 Lp = v.lp_apart();
        if (dist(c.E, c.F_t) <= 1e-9 * v.s()) throw Skip{"E and F coincide"};
        return concurrence(Line2::through(c.E, c.F_t), Line2::through(c.T, Lp),
                           Line2::through(c.tri.C, c.tri.B), v.s());
    }));
    R.push_back(vertex_entry("P22_result19", [](Vertex& v) {
        auto& c = v.c;
        Point2 Lp = v.lp_apart(), X = v.need(c.X, "X"), Y = v.need(c.Y, "Y");
        if (dist(X, Y) <= 1e-9 * v.s()) throw Skip{"X and Y coincide"};
        return concurrence(Line2::through(Y, X), Line2::through(c.T, Lp), Line2::through(c.tri.C, c.tri.B),
                           v.s());
    }));
    R.push_back(vertex_entry("P23_result14", [](Vertex& v) {
        auto& c = v.c;
        Point2 Lp = v.lp_apart();
        return std::abs(ang(c.tri.A, c.T, Lp) - ang(Lp, c.T, c.L));
    }));
    R.push_back(vertex_entry("P24_result16", [](Vertex& v) {
        auto& c = v.c;
        Point2 Yf = v.need(c.Yp_far, "Yp_far");
        return std::abs(dist(c.T, c.L) - dist(c.T, Yf)) / v.s();
    }));
    R.push_back(vertex_entry("P25_result5", [](Vertex& v) {
        auto& c = v.c;
        Point2 M = v.need(c.M_T, "M_T");
        return std::abs(ang(c.L, c.T, c.I) - ang(c.I, c.T, M));
    }));
    R.push_back(vertex_entry("P26_result1", [](Vertex& v) {
        auto& c = v.c;
        if (c.point_circle) throw Skip{"gamma is a point circle"};
        return std::abs(ang(c.tri.A, c.T, c.D) - ang(c.I, c.L, c.T));
    }));
    R.push_back(vertex_entry("P27_tlm_tangent", [](Vertex& v) {
        auto& c = v.c;
        Point2 M = v.need(c.M_T, "M_T");
        if (dist(M, c.L) <= 1e-9 * v.s()) throw Skip{"M coincides with L"};
        Circle2 k = circle_through(c.T, c.L, M);
        double d = dist(k.center, c.gamma.center);
        double res = std::min(std::abs(d - (k.radius + c.gamma.radius)), std::abs(d - std::abs(k.radius - c.gamma.radius)));
        v.w = {{"T", c.T}, {"L", c.L}, {"M", M}};
        return res / v.s();
    }));
    R.push_back(vertex_entry("P28_result7", [](Vertex& v) {
        auto& c = v.c;
        if (c.point_circle) throw Skip{"gamma is a point circle"};
        return std::abs(ang(c.D, c.T, c.I) - ang(c.T, c.I, c.L));
    }));
    R.push_back(vertex_entry("P29_result21", [](Vertex& v) {
        auto& c = v.c;
        Point2 X = v.need(c.X, "X"), Yp = v.need(c.Yp, "Yp");
        return concyclic(X, Yp, c.T, c.L, v.s());
    }));
    R.push_back(vertex_entry("P30_result20", [](Vertex& v) {
        auto& c = v.c;
        Point2 Lp = v.lp_apart();
        return perpendicular(c.I, c.T, c.T, Lp);
    }));
    R.push_back(vertex_entry("P31_result22", [](Vertex& v) {
        auto& c = v.c;
        Point2 X = v.need(c.X, "X"), G = v.need(c.G, "G");
        return concyclic(X, G, c.I, c.L, v.s());
    }));
    R.push_back(vertex_entry("P32_result23", [](Vertex& v) {
        auto& c = v.c;
        Point2 K = v.need(c.K_x, "K_x");
        Circle2 circ{midpoint(K, c.I), dist(K, c.I) / 2};
        double res = 0;
        for (Point2 q : {v.need(c.X, "X"), v.need(c.G, "G"), v.need(c.Yp, "Yp"), c.T, c.L})
            res = std::max(res, circ.dist_to(q));
        v.w = {{"K", K}, {"I", c.I}};
        return res / v.s();
    }));
    R.push_back(vertex_entry("P33_result26", [](Vertex& v) {
        auto& c = v.c;
        if (c.point_circle) throw Skip{"gamma is a point circle"};
        Point2 X = v.need(c.X, "X");
        return std::abs(ang(c.tri.A, c.T, c.D) - ang(c.I, X, c.T));
    }));
    R.push_back(vertex_entry("P34_ltn", [](Vertex& v) {
        auto& c = v.c;
        // TL' is the external bisector of BTC, so it meets omega again at the midpoint
        // of the arc containing T
        Point2 Lp = v.lp_apart();
        Point2 near = c.arc.O * 2 - c.N;
        v.w = {{"L'", Lp}, {"T", c.T}, {"N'", near}};
        return collinear(Lp, c.T, near, v.s());
    }));
    R.push_back(vertex_entry("P35_touching_chord", [](Vertex& v) {
        // omega and the circle tangent to it at T through L, cut by line BC
        auto& c = v.c;
        Point2 e = unit(c.arc.O - c.T);
        Point2 tl = c.T - c.L;
        double den = 2 * dot(e, tl);
        if (std::abs(den) <= 1e-12 * v.s()) throw Skip{"no circle tangent at T through L"};
        double s = -dot(tl, tl) / den;
        if (s <= 0) throw Skip{"auxiliary circle not internally tangent"};
        Circle2 q{c.T + e * s, s};
        Line2 bc = Line2::through(c.tri.B, c.tri.C);
        auto hits = intersect_line_circle(bc, q);
        if (hits.size() != 2) throw Skip{"BC tangent to the auxiliary circle"};
        Point2 near_b = dot(hits[0] - c.tri.B, bc.d) < dot(hits[1] - c.tri.B, bc.d) ? hits[0] : hits[1];
        Point2 other = near_b.x == hits[0].x && near_b.y == hits[0].y ? hits[1] : hits[0];
        v.w = {{"C'", near_b}, {"D'", other}};
        return std::abs(ang(c.tri.B, c.T, near_b) - ang(other, c.T, c.tri.C));
    }));
}

// ---------------------------------------------------------------- formula checks

void add_formula_checks(std::vector<Entry>& R) {
    R.push_back(vertex_entry("F01_rho_forms", [](Vertex& v) {
        auto& c = v.c;
        double r = c.m.r;
        double res = 0;
        for (double f : ajima_radius_forms(c.m, 0, c.arc.t)) res = std::max(res, std::abs(f - c.rho) / r);
        Circle2 o = ajima_oracle(v.ctx.t, c.arc);
        return std::max(res, std::abs(o.radius - c.rho) / r);
    }));
    R.push_back(vertex_entry("F02_Ra_forms", [](Vertex& v) {
        auto& c = v.c;
        double res = 0;
        for (double f : c.arc.R_forms) res = std::max(res, std::abs(f - c.arc.R_arc) / c.arc.R_arc);
        double central = std::min(c.arc.theta, 2 * kPi - c.arc.theta);
        res = std::max(res, std::abs(ang(c.tri.B, c.arc.O, c.tri.C) - central));
        res = std::max(res, std::abs(dist(c.arc.O, c.tri.B) - c.arc.R_arc) / v.s());
        return res;
    }));
    R.push_back(vertex_entry("F03_angle_IFA", [](Vertex& v) {
        auto& c = v.c;
        Point2 F = v.need(c.Fj, "Fj");
        if (dist(F, c.tri.A) <= 1e-9 * v.s()) throw Skip{"F coincides with A"};
        v.w = {{"F", F}, {"J", *c.J}};
        return std::abs(ang(c.I, F, c.tri.A) - c.arc.theta / 2);
    }));
    R.push_back(vertex_entry("F04_IF", [](Vertex& v) {
        Lengths L = lengths(v.c);
        return L.IF_len.residual() / v.s();
    }));
    R.push_back(vertex_entry("F05_angle_HIE", [](Vertex& v) {
        auto& c = v.c;
        if (dist(c.H, c.E) <= 1e-12 * v.s()) return 0.0;
        return std::abs(ang(c.H, c.I, c.E) - c.arc.theta / 4);
    }));
    R.push_back(vertex_entry("F06_angle_DEI", [](Vertex& v) {
        auto& c = v.c;
        if (c.point_circle) throw Skip{"gamma is a point circle"};
        return std::abs(ang(c.D, c.E, c.I) - c.arc.theta / 4);
    }));
    R.push_back(vertex_entry("F07_KH", [](Vertex& v) {
        Lengths L = lengths(v.c);
        return L.HK.residual() / v.s();
    }));
    R.push_back(vertex_entry("F08_AK", [](Vertex& v) {
        Lengths L = lengths(v.c);
        return L.AK.residual() / v.s();
    }));
    R.push_back(vertex_entry("F09_AL", [](Vertex& v) {
        Lengths L = lengths(v.c);
        double ratio = std::abs(L.ALp.measured / L.AL_len.measured - L.ALp_over_AL_formula);
        return std::max({L.AL_len.residual() / v.s(), L.ALp.residual() / v.s(), ratio});
    }));
    R.push_back(vertex_entry("F10_AX", [](Vertex& v) {
        Lengths L = lengths(v.c);
        double ratio = L.ALp.measured > 1e-12 * v.s()
                           ? std::abs(L.AX_len.measured / L.ALp.measured - L.AX_over_ALp_formula)
                           : 0.0;
        return std::max(L.AX_len.residual() / v.s(), ratio);
    }));
    R.push_back(vertex_entry("F11_routes", [](Vertex& v) {
        auto& c = v.c;
        double r = c.m.r;
        Circle2 orc = ajima_oracle(v.ctx.t, c.arc);
        double res = std::max(dist(orc.center, c.D) / r, std::abs(orc.radius - c.rho) / r);
        v.w = {{"D", c.D}, {"D_oracle", orc.center}};
        // the midarc route meets line OT with the bisector; at an isosceles apex they coincide
        double sine = std::abs(cross(unit(c.T - c.arc.O), unit(c.I - c.tri.A)));
        if (sine >= kRayFloor) {
            Circle2 mid = gamma_via_midarc(v.ctx.t, c.arc);
            v.w.push_back({"D_midarc", mid.center});
            res = std::max({res, dist(mid.center, c.D) / r, std::abs(mid.radius - c.rho) / r});
        }
        return res;
    }));
    R.push_back(vertex_entry("F12_extended_radius", [](Vertex& v) {
        // an arc beyond the interior range; the inscribed circle now lies past A
        auto& c = v.c;
        double A = rad2deg(c.m.angle(0));
        double th = (2 * (180 - A) + 360) / 2;
        ArcGeometry arc = build_arc(v.ctx.t, v.k, th);
        VariantCircles vc = variant_circles(v.ctx.t, arc);
        auto ext = vc.extended_internal();
        if (!ext) throw Skip{"no extended circle"};
        Point2 K = Line2::through(c.tri.A, c.tri.C).project(ext->circle.center);
        double closed = std::abs(ajima_radius(c.m, 0, arc.t));
        v.w = {{"K", K}, {"center", ext->circle.center}};
        return std::max(std::abs(ang(c.H, c.I, K) - deg2rad(th) / 4),
                        std::abs(ext->circle.radius - closed) / c.m.r);
    }));
    R.push_back(sample_entry("F13_triangle_lemmas", [](const Ctx& x, Witness&) {
        const TriangleMetrics& m = x.m;
        double t0 = m.half_tan(0), t1 = m.half_tan(1), t2 = m.half_tan(2);
        double a = m.a, b = m.b, c = m.c, p = m.p, r = m.r;
        double res = std::abs(t0 + t1 + t2 - m.W) / m.W;
        res = std::max(res, std::abs(t0 * t1 + t1 * t2 + t2 * t0 - 1));
        res = std::max(res, std::abs(t0 * t1 * t2 - r / p) * p / r);
        double rw = (2 * a * b + 2 * b * c + 2 * c * a - a * a - b * b - c * c) / (2 * (a + b + c));
        res = std::max(res, std::abs(r * m.W - rw) / x.scale);
        for (int k = 0; k < 3; ++k) {
            TriangleMetrics q = m.rotated(k);
            double w2 = r / (p - q.a) * (q.a * (p - q.a) / ((p - q.b) * (p - q.c)) + 1);
            res = std::max(res, std::abs(m.W - w2) / m.W);
            Triangle loc = x.t.rotated(k);
            ContactPoints cp = contact_points(loc);
            res = std::max(res, std::abs(dist(loc.A, cp.M_c) - (p - q.a)) / x.scale);
        }
        return res;
    }));
    R.push_back(sample_entry("F14_gergonne_cevians", [](const Ctx& x, Witness& w) {
        double res = 0;
        for (int k = 0; k < 3; ++k) {
            Triangle loc = x.t.rotated(k);
            TriangleMetrics q = x.m.rotated(k);
            double a = q.a, b = q.b, c = q.c, p = q.p;
            double kk = a * p - (b - c) * (b - c);
            CevianRatios cr = gergonne_cevian_ratios(loc);
            Point2 Ge = gergonne_point(loc), L = contact_points(loc).L;
            double AL = std::sqrt((p - a) * kk / a);
            double AGe = (p - a) * std::sqrt(a * (p - a) * kk) / (p * q.r * q.W);
            double ratio = (p - b) * (p - c) / (a * (p - a));
            res = std::max({res, std::abs(cr.AL_len - AL) / x.scale, std::abs(dist(loc.A, L) - AL) / x.scale,
                            std::abs(cr.AGe_len - AGe) / x.scale, std::abs(dist(loc.A, Ge) - AGe) / x.scale,
                            std::abs(dist(L, Ge) / dist(loc.A, Ge) - ratio),
                            std::abs(cr.LGe_over_AGe - ratio), std::abs(AL / AGe - (1 + ratio))});
            if (k == 0) w = {{"Ge", Ge}, {"L", L}};
        }
        return res;
    }));
}

// ---------------------------------------------------------------- triad checks

Point2 ge_of(const Ctx& x) { return gergonne_point(x.t); }

std::array<Line2, 3> cevians(const Ctx& x, const std::array<Point2, 3>& ends) {
    return {Line2::through(x.t.A, ends[0]), Line2::through(x.t.B, ends[1]), Line2::through(x.t.C, ends[2])};
}

void add_triad_checks(std::vector<Entry>& R) {
    R.push_back(triad_entry("T01_tangents", [](const Ctx& x, Witness&) {
        double res = 0, target = 2 * x.m.r * x.tparam;
        for (int k = 0; k < 3; ++k) {
            const Circle2 &g1 = x.triad->gamma(k), &g2 = x.triad->gamma((k + 1) % 3);
            double d = dist(g1.center, g2.center), dr = g1.radius - g2.radius;
            res = std::max(res, std::abs(std::sqrt(std::max(0.0, d * d - dr * dr)) - target) / x.scale);
        }
        return res;
    }));
    R.push_back(triad_entry("T02_midpoints", [](const Ctx& x, Witness& w) {
        double res = 0;
        const auto& cf = x.triad->cfg;
        for (int k = 0; k < 3; ++k) {
            Point2 m = midpoint(cf[(k + 1) % 3].F_t, cf[(k + 2) % 3].E);
            res = std::max(res, dist(m, cf[k].L) / x.scale);
            w.push_back({"L" + std::to_string(k), cf[k].L});
        }
        return res;
    }));
    R.push_back(triad_entry("T03_radical_axis", [](const Ctx& x, Witness&) {
        double res = 0;
        const auto& cf = x.triad->cfg;
        for (int k = 0; k < 3; ++k) {
            Line2 ax = radical_axis(x.triad->gamma((k + 1) % 3), x.triad->gamma((k + 2) % 3));
            res = std::max({res, ax.dist(cf[k].tri.A) / x.scale, ax.dist(cf[k].L) / x.scale});
        }
        return res;
    }));
    R.push_back(triad_entry("T04_radical_center", [](const Ctx& x, Witness& w) {
        Point2 S = radical_center(x.triad->gamma(0), x.triad->gamma(1), x.triad->gamma(2));
        Point2 Ge = ge_of(x);
        w = {{"S", S}, {"Ge", Ge}};
        return dist(S, Ge) / x.scale;
    }));
    R.push_back(triad_entry("T05_sixpoint", [](const Ctx& x, Witness&) {
        double rad = x.m.r / std::cos(deg2rad(x.theta) / 4);
        double res = 0;
        for (const auto& c : x.triad->cfg)
            res = std::max({res, std::abs(dist(c.I, c.E) - rad) / x.scale, std::abs(dist(c.I, c.F_t) - rad) / x.scale});
        return res;
    }));
    R.push_back(triad_entry("T06_jacobi", [](const Ctx& x, Witness&) {
        const auto& cf = x.triad->cfg;
        auto l = cevians(x, {cf[0].arc.O, cf[1].arc.O, cf[2].arc.O});
        return concurrence(l[0], l[1], l[2], x.scale);
    }));
    R.push_back(triad_entry("T07_paasche", [](const Ctx& x, Witness& w) {
        const auto& cf = x.triad->cfg;
        auto l = cevians(x, {cf[0].T, cf[1].T, cf[2].T});
        double res = concurrence(l[0], l[1], l[2], x.scale);
        // the same concurrence for the other inscribed circles touching the arcs
        std::array<VariantCircles, 3> vc;
        for (int k = 0; k < 3; ++k) vc[k] = variant_circles(x.t, cf[k].arc);
        int slots = 0;
        for (int slot = 2; slot <= 4; ++slot) {
            std::array<Point2, 3> touch;
            bool all = true;
            for (int k = 0; k < 3; ++k) {
                const auto& o = slot == 2 ? vc[k].c2 : slot == 3 ? vc[k].c3 : vc[k].c4;
                if (!o) { all = false; break; }
                touch[k] = o->touch;
            }
            if (!all) continue;
            ++slots;
            auto lv = cevians(x, touch);
            res = std::max(res, concurrence(lv[0], lv[1], lv[2], x.scale));
        }
        w = {{"T_a", cf[0].T}, {"T_b", cf[1].T}, {"T_c", cf[2].T}};
        return res;
    }));
}

// ---------------------------------------------------------------- Apollonius checks

double bary_gap(const Triangle& tri, const BaryCoords& b, Point2 p, double s) {
    return dist(bary_to_point(tri, b), p) / s;
}

void add_apollonius_checks(std::vector<Entry>& R) {
    R.push_back(vertex_entry("A01_bary_D", [](Vertex& v) {
        return bary_gap(v.c.tri, bary_D(v.c.m, v.c.arc.t), v.c.D, v.s());
    }));
    R.push_back(vertex_entry("A02_bary_Oa", [](Vertex& v) {
        return bary_gap(v.c.tri, bary_Oa(v.c.m, v.c.arc.theta_deg), v.c.arc.O, v.s());
    }));
    R.push_back(vertex_entry("A03_bary_T", [](Vertex& v) {
        auto& c = v.c;
        return std::max(bary_gap(c.tri, bary_T(c.m, c.arc.theta_deg), c.T, v.s()),
                        bary_gap(c.tri, bary_T_division(c.m, c.arc.theta_deg), c.T, v.s()));
    }));
    R.push_back(vertex_entry("A04_coord_Ua", [](Vertex& v) {
        auto& c = v.c;
        return bary_gap(c.tri, bary_touchpoints(c.m, c.arc.t).U_a, v.need(c.Lp, "Lp"), v.s());
    }));
    R.push_back(vertex_entry("A05_coord_U", [](Vertex& v) {
        if (!v.ctx.apo) throw Skip{v.ctx.triad_error};
        return bary_gap(v.c.tri, bary_touchpoints(v.c.m, v.c.arc.t).U, v.ctx.apo->inner.circle.center, v.s());
    }));
    R.push_back(vertex_entry("A06_coord_Va", [](Vertex& v) {
        auto& c = v.c;
        return bary_gap(c.tri, bary_touchpoints(c.m, c.arc.t).V_a, v.need(c.X, "X"), v.s());
    }));
    R.push_back(vertex_entry("A07_coord_V", [](Vertex& v) {
        if (!v.ctx.apo) throw Skip{v.ctx.triad_error};
        return bary_gap(v.c.tri, bary_touchpoints(v.c.m, v.c.arc.t).V, v.ctx.apo->outer.circle.center, v.s());
    }));
    R.push_back(triad_entry("A08_rho_inner", [](const Ctx& x, Witness& w) {
        w = {{"U", x.apo->inner.circle.center}};
        return std::abs(x.apo->inner.rho - rho_inner(x.m, x.tparam)) / x.m.r;
    }));
    R.push_back(triad_entry("A09_rho_outer", [](const Ctx& x, Witness& w) {
        w = {{"V", x.apo->outer.circle.center}};
        return std::abs(x.apo->outer.rho - rho_outer(x.m, x.tparam)) / x.m.r;
    }));
    R.push_back(triad_entry("A10_outer_inner_linear", [](const Ctx& x, Witness&) {
        double ri = x.apo->inner.rho, ro = x.apo->outer.rho, r = x.m.r;
        return std::abs(3 * ro - (ri + 4 * r)) / r;
    }));
    R.push_back(triad_entry("A11_outer_radius_sum", [](const Ctx& x, Witness&) {
        double ri = x.apo->inner.rho, ro = x.apo->outer.rho;
        double sum = 0;
        for (int k = 0; k < 3; ++k) sum += x.triad->gamma(k).radius;
        return std::abs(3 * ro - 2 * sum - 3 * ri) / x.m.r;
    }));
    R.push_back(triad_entry("A12_radius_ratio", [](const Ctx& x, Witness&) {
        double ri = x.apo->inner.rho, ro = x.apo->outer.rho, r = x.m.r;
        return std::abs((ri + r) - 3 * (ro - r)) / r;
    }));
    R.push_back(triad_entry("A13_soddy", [](const Ctx& x, Witness& w) {
        Point2 U = x.apo->inner.circle.center, V = x.apo->outer.circle.center, I = incenter(x.t);
        double res = std::abs(dist(U, I) - 3 * dist(I, V)) / x.scale;
        w = {{"U", U}, {"I", I}, {"V", V}};
        try {
            SoddyData sd = soddy_line(x.t, *x.apo);
            res = std::max(res, sd.collinear_residual / x.scale);
            if (!sd.ordered) res = std::numeric_limits<double>::infinity();
            w.push_back({"Ge", sd.Ge});
        } catch (const GeometryError& e) {
            if (e.code() != ErrorCode::EquilateralDegenerate) throw;
        }
        return res;
    }));
    R.push_back(triad_entry("A14_GeUI_GeVI", [](const Ctx& x, Witness&) {
        Point2 Ge = ge_of(x), I = incenter(x.t);
        Point2 U = x.apo->inner.circle.center, V = x.apo->outer.circle.center;
        double r = x.m.r;
        Point2 g = I - Ge;
        return std::max(dist(U, Ge - g * (x.apo->inner.rho / r)), dist(V, Ge + g * (x.apo->outer.rho / r))) /
               x.scale;
    }));
    R.push_back(sample_entry("A15_GeI", [](const Ctx& x, Witness& w) {
        Point2 Ge = ge_of(x), I = incenter(x.t);
        w = {{"Ge", Ge}, {"I", I}};
        double W = x.m.W;
        double f = x.m.r * std::sqrt(std::max(0.0, 1 - 3 / (W * W)));
        double q = 4 * x.m.R + x.m.r;
        double alt = x.m.r * std::sqrt(std::max(0.0, q * q - 3 * x.m.p * x.m.p)) / q;
        return std::max(std::abs(dist(Ge, I) - f), std::abs(alt - f)) / x.scale;
    }));
    R.push_back(vertex_entry("A16_cevian_points", [](Vertex& v) {
        auto& c = v.c;
        Point2 Ge = gergonne_point(c.tri);
        Point2 Lp = v.need(c.Lp, "Lp"), X = v.need(c.X, "X");
        double s = v.s();
        return std::max({collinear(c.tri.A, c.L, Lp, s), collinear(c.tri.A, c.L, X, s), collinear(c.tri.A, c.L, Ge, s)});
    }));
    R.push_back(sample_entry("A17_gamma_concur", [](const Ctx& x, Witness& w) {
        // the one theta with tW = 1
        double th = rad2deg(4 * std::atan(1 / x.m.W));
        std::array<Circle2, 3> g;
        Point2 Ge = ge_of(x);
        double res = 0;
        for (int k = 0; k < 3; ++k) {
            if (!interior_theta(x.m, k, th)) throw Skip{"tW = 1 outside the interior range"};
            ArcGeometry arc = build_arc(x.t, k, th);
            AjimaConfiguration c = build_gamma(x.t, arc, x.tol);
            g[k] = c.gamma;
            res = std::max(res, std::abs(dist(Ge, c.D) - c.rho) / x.scale);
        }
        GenericSolution s = generic_apollonius_oracle(g[0], g[1], g[2], ApolloniusFamily::Inner);
        w = {{"Ge", Ge}, {"U", s.circle.center}};
        return std::max({res, std::abs(s.sigma) / x.m.r, dist(s.circle.center, Ge) / x.scale});
    }));
    R.push_back(sample_entry("A18_omega_concur", [](const Ctx& x, Witness& w) {
        std::array<Circle2, 3> om;
        for (int k = 0; k < 3; ++k) om[k] = build_arc(x.t, k, 120).circle();
        Point2 S = radical_center(om[0], om[1], om[2]);
        double res = 0;
        for (const auto& o : om) res = std::max(res, o.dist_to(S) / x.scale);
        w = {{"S", S}};
        return res;
    }));
    R.push_back(triad_entry("A19_Ua_triangle", [](const Ctx& x, Witness& w) {
        const auto& cf = x.triad->cfg;
        std::array<Line2, 3> tg;
        double res = 0;
        for (int k = 0; k < 3; ++k) {
            Point2 U = cf[k].need(cf[k].Lp, "Lp");
            tg[k] = Line2::from_dir(U, perp(U - cf[k].D));
            res = std::max(res, is_parallel(tg[k], Line2::through(cf[k].tri.B, cf[k].tri.C)).residual);
        }
        Point2 Ge = ge_of(x);
        for (int k = 0; k < 3; ++k) {
            auto P = intersect_lines(tg[(k + 1) % 3], tg[(k + 2) % 3]);
            if (!P) throw Skip{"tangent lines parallel"};
            res = std::max(res, collinear(cf[k].tri.A, *P, Ge, x.scale));
            w.push_back({"P" + std::to_string(k), *P});
        }
        return res;
    }));
    R.push_back(triad_entry("A20_equal_tangents", [](const Ctx& x, Witness&) {
        const auto& cf = x.triad->cfg;
        double res = 0;
        for (int k = 0; k < 3; ++k) {
            Point2 U = cf[k].need(cf[k].Lp, "Lp");
            double p1 = x.triad->gamma((k + 1) % 3).power(U), p2 = x.triad->gamma((k + 2) % 3).power(U);
            res = std::max(res, std::abs(p1 - p2) / (x.scale * x.scale));
        }
        return res;
    }));
    R.push_back(triad_entry("A21_oi", [](const Ctx& x, Witness& w) {
        Point2 S = radical_center(x.triad->gamma(0), x.triad->gamma(1), x.triad->gamma(2));
        Point2 U = x.apo->inner.circle.center, V = x.apo->outer.circle.center;
        w = {{"S", S}};
        return norm((U - S) + (V - S) * (x.apo->inner.rho / x.apo->outer.rho)) / x.scale;
    }));
    R.push_back(triad_entry("A22_similitude_center", [](const Ctx& x, Witness& w) {
        double ri = x.apo->inner.rho, ro = x.apo->outer.rho;
        Point2 U = x.apo->inner.circle.center, V = x.apo->outer.circle.center;
        if (std::abs(ri + ro) <= 1e-12 * x.m.r) throw Skip{"radii cancel"};
        Point2 S = (U * ro + V * ri) / (ro + ri);
        w = {{"S", S}};
        return dist(S, ge_of(x)) / x.scale;
    }));
    R.push_back(triad_entry("A23_rho_i_squared", [](const Ctx& x, Witness&) {
        double sq = 0, r = x.m.r, t = x.tparam;
        for (int k = 0; k < 3; ++k) sq += x.triad->gamma(k).radius * x.triad->gamma(k).radius;
        double ri = x.apo->inner.rho;
        return std::abs(ri * ri - (sq + 2 * r * r * (t * t - 1))) / (r * r);
    }));
    R.push_back(triad_entry("A24_rho_i_sum", [](const Ctx& x, Witness&) {
        double sum = 0;
        for (int k = 0; k < 3; ++k) sum += x.triad->gamma(k).radius;
        return std::abs(x.apo->inner.rho - (2 * x.m.r - sum)) / x.m.r;
    }));
    R.push_back(triad_entry("A25_newton_oracle", [](const Ctx& x, Witness& w) {
        const Triad& tr = *x.triad;
        GenericSolution in = generic_apollonius_oracle(tr.gamma(0), tr.gamma(1), tr.gamma(2), ApolloniusFamily::Inner);
        GenericSolution out = generic_apollonius_oracle(tr.gamma(0), tr.gamma(1), tr.gamma(2), ApolloniusFamily::Outer);
        w = {{"U_newton", in.circle.center}, {"V_newton", out.circle.center}};
        return std::max({dist(in.circle.center, x.apo->inner.circle.center) / x.scale,
                         std::abs(in.sigma - x.apo->inner.rho) / x.m.r,
                         dist(out.circle.center, x.apo->outer.circle.center) / x.scale,
                         std::abs(out.sigma - x.apo->outer.rho) / x.m.r});
    }));
    R.push_back(triad_entry("A26_tangency_kinds", [](const Ctx& x, Witness&) {
        double ri = x.apo->inner.rho, ro = x.apo->outer.rho;
        double res = 0;
        for (int k = 0; k < 3; ++k) {
            const Circle2& g = x.triad->gamma(k);
            double di = dist(x.apo->inner.circle.center, g.center);
            double dout = dist(x.apo->outer.circle.center, g.center);
            // signed inner radius: d = rho_k + rho_i covers both kinds
            res = std::max({res, std::abs(di - (g.radius + ri)) / x.scale, std::abs(dout - (ro - g.radius)) / x.scale});
        }
        double tw = x.tparam * x.m.W - 1;
        if (std::abs(tw) > 1e-9 && (tw > 0) != (ri > 0)) res = std::numeric_limits<double>::infinity();
        return res;
    }));
}

// ---------------------------------------------------------------- identity checks

std::vector<CheckResult> identity_results(const Ctx& x, double thr, bool scaling) {
    TriadScalars s = triad_scalars(x.t, *x.triad, *x.apo);
    if (scaling) return scaling_suite(s, semicircle_baseline(x.t), thr);
    auto a = identity_suite(s, thr);
    auto b = radius_relation_suite(s, thr);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void add_identity_checks(std::vector<Entry>& R) {
    static const char* ids[] = {"I01_deficit_sum",       "I02_deficit_pairs",           "I03_deficit_product",      "I04_sum",
                                "I05_pair_sum_expanded", "I06_pair_sum", "I07_square_sum", "I08_product",
                                "I09_formula",  "I10_arc_radius_relation",         "I11_t_squared", "I12_theta_360_minus_4A",
                                "I13_sin2x"};
    static const char* sids[] = {"S01_rho_minus_r",  "S02_rho_minus_rho",  "S03_tangent_length",
                                 "S04_center_distance", "S05_rho_i_plus_r", "S06_rho_o_minus_r",
                                 "S07_d_difference", "S08_center_distance_squares", "S09_similar_center_triangles"};
    auto make = [](bool scaling) {
        return [scaling](const Ctx& x, const std::string& id, double thr) {
            if (!x.apo) return not_applicable(id, x.triad_error);
            try {
                for (auto& r : identity_results(x, thr, scaling))
                    if (r.check_id == id) return r;
            } catch (const GeometryError& e) {
                return not_applicable(id, e.what());
            }
            return not_applicable(id, "identity not evaluated");
        };
    };
    for (const char* id : ids) R.push_back({id, make(false)});
    for (const char* id : sids) R.push_back({id, make(true)});
}

// ---------------------------------------------------------------- variant checks

struct Candidate {
    const char* name;
    Point2 p;
};

void add_variant_checks(std::vector<Entry>& R) {
    R.push_back(vertex_entry("V01_variants", [](Vertex& v) {
        auto& c = v.c;
        VariantCircles vc = variant_circles(v.ctx.t, c.arc);
        Line2 AB = Line2::through(c.tri.A, c.tri.B), AC = Line2::through(c.tri.A, c.tri.C);
        double res = 0;
        for (const auto& [name, vcirc] : vc.all()) {
            const Circle2& k = vcirc.circle;
            double d = dist(k.center, c.arc.O);
            double want = vcirc.kind == TangencyKind::External ? k.radius + c.arc.R_arc : std::abs(c.arc.R_arc - k.radius);
            res = std::max({res, std::abs(d - want) / v.s(), std::abs(AB.dist(k.center) - k.radius) / v.s(),
                            std::abs(AC.dist(k.center) - k.radius) / v.s()});
        }
        // interior regime: all four present, c1 is gamma, c1/c4 external, c2/c3 internal
        if (!vc.c1 || !vc.c2 || !vc.c3 || !vc.c4) return std::numeric_limits<double>::infinity();
        if (vc.c1->kind != TangencyKind::External || vc.c4->kind != TangencyKind::External ||
            vc.c2->kind != TangencyKind::Internal || vc.c3->kind != TangencyKind::Internal)
            return std::numeric_limits<double>::infinity();
        res = std::max({res, dist(vc.c1->circle.center, c.D) / v.s(), std::abs(vc.c1->circle.radius - c.rho) / v.s()});
        return res;
    }));
    R.push_back(vertex_entry("V02_variant_centers", [](Vertex& v) {
        auto& c = v.c;
        const Point2 A = c.tri.A, B = c.tri.B, C = c.tri.C;
        VariantCircles vc = variant_circles(v.ctx.t, c.arc);
        std::array<Candidate, 4> cand{{{"I", c.I},
                                       {"I_a", excenter(c.tri, 0)},
                                       {"I_b", excenter(c.tri, 1)},
                                       {"I_c", excenter(c.tri, 2)}}};
        Line2 AB = Line2::through(A, B), AC = Line2::through(A, C);
        Point2 up = c.arc.O + c.arc.normal * c.arc.R_arc, down = c.arc.O - c.arc.normal * c.arc.R_arc;
        double s = v.s();
        double worst = 0;
        std::string note;
        for (const auto& [name, vcirc] : vc.all()) {
            if (name[0] != 'c') continue;
            Point2 T = vcirc.touch;
            Point2 E = AC.project(vcirc.circle.center), F = AB.project(vcirc.circle.center);
            double best = std::numeric_limits<double>::infinity();
            const char* who = "-";
            for (const auto& x : cand) {
                double r = 0;
                Point2 e = unit(x.p - T);
                Point2 uB = unit(B - T), uC = unit(C - T);
                // Protasov in the line sense: TX bisects one of the two angles between TB and TC
                r = std::max(r, std::min(std::abs(dot(e, uB - uC)), std::abs(dot(e, uB + uC))));
                r = std::max(r, std::min(concyclic(E, T, x.p, C, s), concyclic(F, T, x.p, B, s)));
                if (c.J && dist(*c.J, B) > 1e-9 * s) {
                    auto Fx = intersect_lines(Line2::from_dir(x.p, *c.J - B), AC);
                    if (Fx) r = std::max(r, std::abs(dist(x.p, *Fx) - dist(*Fx, E)) / s);
                }
                r = std::max(r, std::min(collinear(T, x.p, up, s), collinear(T, x.p, down, s)));
                if (r < best) {
                    best = r;
                    who = x.name;
                }
            }
            worst = std::max(worst, best);
            note += (note.empty() ? "" : " ") + name + ":" + who;
        }
        v.w.push_back({note, c.tri.A});
        return worst;
    }));
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> R = [] {
        std::vector<Entry> r;
        add_incircle_checks(r);
        add_formula_checks(r);
        add_triad_checks(r);
        add_apollonius_checks(r);
        add_identity_checks(r);
        add_variant_checks(r);
        std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
        return r;
    }();
    return R;
}

const Entry& find_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw GeometryError(ErrorCode::UnknownCheckId, id);
}

CheckResult evaluate(const Entry& e, const Ctx& ctx, double thr, const SampleDescriptor& d) {
    CheckResult r;
    try {
        r = e.run(ctx, e.id, thr);
    } catch (const GeometryError& err) {
        r = not_applicable(e.id, err.what());
    }
    r.check_id = e.id;
    r.tolerance = thr;
    r.sample = d;
    return r;
}

SampleDescriptor descriptor_of(const Triangle& t, double theta) {
    TriangleMetrics m = metrics(t);
    SampleDescriptor d;
    d.sides = {m.a, m.b, m.c};
    d.theta = {theta, theta, theta};
    return d;
}

}  // namespace

// ---------------------------------------------------------------- public entry points

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

bool has_check(const std::string& id) {
    const auto& ids = registry_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckResult run_check(const std::string& id, const Triangle& t, double theta_deg, const Tolerance& tol,
                      double threshold) {
    const Entry& e = find_entry(id);
    Ctx ctx = make_ctx(t, theta_deg, tol);
    return evaluate(e, ctx, threshold, descriptor_of(t, theta_deg));
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const Triangle& t, double theta_deg,
                                    const Tolerance& tol, const SamplePolicy& policy) {
    std::vector<const Entry*> es;
    for (const auto& id : ids.empty() ? registry_ids() : ids) es.push_back(&find_entry(id));
    Ctx ctx = make_ctx(t, theta_deg, tol);
    SampleDescriptor d = descriptor_of(t, theta_deg);
    std::vector<CheckResult> out;
    for (const Entry* e : es) out.push_back(evaluate(*e, ctx, policy.threshold_for(e->id), d));
    return out;
}

double CheckSummary::na_rate() const {
    long n = pass + fail + na;
    return n ? static_cast<double>(na) / n : 0.0;
}

long SuiteReport::total_fail() const {
    long f = 0;
    for (const auto& c : per_check) f += c.fail;
    return f;
}

SuiteReport run_suite(const SamplePolicy& policy, const std::vector<std::string>& ids, const Tolerance& tol) {
    SuiteReport rep;
    rep.policy = policy;
    rep.tol = tol;
    std::vector<const Entry*> es;
    for (const auto& id : ids.empty() ? registry_ids() : ids) es.push_back(&find_entry(id));
    std::sort(es.begin(), es.end(), [](const Entry* a, const Entry* b) { return a->id < b->id; });
    es.erase(std::unique(es.begin(), es.end()), es.end());

    auto samples = draw_samples(policy);
    rep.samples = static_cast<long>(samples.size());
    if (samples.empty()) return rep;
    rep.per_check.resize(es.size());
    for (size_t i = 0; i < es.size(); ++i) rep.per_check[i].id = es[i]->id;

    constexpr size_t kKeepFailures = 10;
    for (const Sample& s : samples) {
        Ctx ctx = make_ctx(s.tri, s.desc.theta[0], tol);
        for (size_t i = 0; i < es.size(); ++i) {
            CheckResult r = evaluate(*es[i], ctx, policy.threshold_for(es[i]->id), s.desc);
            CheckSummary& sum = rep.per_check[i];
            switch (r.verdict) {
            case Outcome::Pass: ++sum.pass; break;
            case Outcome::Fail:
                ++sum.fail;
                if (sum.failures.size() < kKeepFailures) sum.failures.push_back(r);
                break;
            case Outcome::NotApplicable: {
                ++sum.na;
                // keep the reason category, not the per-sample numbers
                std::string key = r.reason.substr(0, r.reason.find(':'));
                ++sum.na_reasons[key];
                break;
            }
            }
            if (r.verdict != Outcome::NotApplicable && (!sum.worst_sample || r.residual > sum.max_residual)) {
                sum.max_residual = r.residual;
                sum.worst_sample = s.desc;
            }
        }
    }
    return rep;
}

nlohmann::ordered_json descriptor_json(const SampleDescriptor& d) {
    nlohmann::ordered_json j;
    j["sides"] = d.sides;
    j["theta"] = d.theta;
    j["seed"] = d.seed;
    j["index"] = d.index;
    return j;
}

namespace {

nlohmann::ordered_json residual_json(double x) {
    if (std::isfinite(x)) return x;
    return "inf";
}

}  // namespace

nlohmann::ordered_json report_json(const SuiteReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["version"] = "1";
    ordered_json pol;
    pol["seed"] = r.policy.seed;
    pol["trials"] = r.policy.sides ? 1 : r.policy.trials;
    pol["theta_range"] = {r.policy.theta_lo, r.policy.theta_hi};
    pol["constraint"] = r.policy.constraint == SampleConstraint::Interior ? "interior" : "any";
    pol["side_ratio_cap"] = r.policy.side_ratio_cap;
    pol["threshold"] = r.policy.threshold;
    pol["overrides"] = r.policy.overrides;
    pol["kernel_tolerance"] = {{"rel", r.tol.rel}, {"abs_floor", r.tol.abs_floor}};
    if (r.policy.sides) pol["triangle"] = *r.policy.sides;
    if (r.policy.theta) pol["theta"] = *r.policy.theta;
    j["policy"] = pol;

    ordered_json checks = ordered_json::array();
    long pass = 0, fail = 0, na = 0;
    std::vector<std::string> failing;
    for (const auto& c : r.per_check) {
        ordered_json e;
        e["id"] = c.id;
        e["pass"] = c.pass;
        e["fail"] = c.fail;
        e["na"] = c.na;
        e["na_rate"] = c.na_rate();
        e["max_residual"] = residual_json(c.max_residual);
        e["worst_sample"] = c.worst_sample ? descriptor_json(*c.worst_sample) : ordered_json(nullptr);
        ordered_json fl = ordered_json::array();
        for (const auto& f : c.failures) {
            ordered_json x;
            x["sample"] = descriptor_json(f.sample);
            x["residual"] = residual_json(f.residual);
            if (!f.reason.empty()) x["note"] = f.reason;
            fl.push_back(x);
        }
        e["failures"] = fl;
        e["na_reasons"] = c.na_reasons;
        checks.push_back(e);
        pass += c.pass;
        fail += c.fail;
        na += c.na;
        if (c.fail) failing.push_back(c.id);
    }
    j["per_check"] = checks;
    j["summary"] = {{"checks", r.per_check.size()}, {"samples", r.samples}, {"pass", pass},
                    {"fail", fail},                 {"na", na},          {"failing_checks", failing}};
    return j;
}

std::string report_text(const SuiteReport& r) { return report_json(r).dump(2) + "\n"; }

}  // namespace ajima
