#include "ajima/ajima.hpp"

#include <algorithm>

namespace ajima {

double ArcGeometry::power(Point2 q) const {
    Point2 v = q - Mid;
    return dot(v, v) - half_chord * half_chord + 2 * offset * dot(normal, v);
}

ArcGeometry build_arc(const Triangle& t, int side, double theta_deg) {
    if (!std::isfinite(theta_deg) || theta_deg <= 0 || theta_deg >= 360)
        throw GeometryError(ErrorCode::ThetaOutOfRange, "theta must lie in (0, 360) degrees");
    if (side < 0 || side > 2) throw GeometryError(ErrorCode::DegenerateTriangle, "side index out of range");
    Triangle loc = t.rotated(side);
    TriangleMetrics m = metrics(loc);
    ArcGeometry g;
    g.side = side;
    g.theta_deg = theta_deg;
    g.theta = deg2rad(theta_deg);
    g.t = std::tan(g.theta / 4);
    g.Mid = midpoint(loc.B, loc.C);
    g.normal = perp(unit(loc.C - loc.B));
    if (dot(g.normal, loc.A - g.Mid) < 0) g.normal = -g.normal;
    g.half_chord = m.a / 2;
    double s2 = std::sin(g.theta / 2);
    g.offset = g.half_chord * std::cos(g.theta / 2) / s2;
    g.O = g.Mid - g.normal * g.offset;
    g.R_arc = g.half_chord / s2;
    g.N = g.O - g.normal * g.R_arc;
    double tt = g.t * g.t + 1;
    g.R_forms = {g.R_arc, m.a * tt / (4 * g.t), m.R * tt * std::sin(m.angle(0)) / (2 * g.t)};
    return g;
}

std::array<double, 3> ajima_radius_forms(const TriangleMetrics& m, int vertex, double t_param) {
    TriangleMetrics q = m.rotated(vertex);
    return {q.r * (1 - std::tan(q.angle(0) / 2) * t_param),
            q.r * (1 - q.r * t_param / (q.p - q.a)),
            (q.area - (q.p - q.b) * (q.p - q.c) * t_param) / q.p};
}

double ajima_radius(const TriangleMetrics& m, int vertex, double t_param) {
    TriangleMetrics q = m.rotated(vertex);
    return q.r * (1 - q.half_tan(0) * t_param);
}

bool interior_theta(const TriangleMetrics& m, int vertex, double theta_deg) {
    return rad2deg(m.angle(vertex)) < 180 - theta_deg / 2;
}

const char* jposition_name(JPosition p) {
    switch (p) {
    case JPosition::Between: return "between";
    case JPosition::BeyondC: return "beyond_C";
    case JPosition::BeyondA: return "beyond_A";
    default: return "absent";
    }
}

Point2 AjimaConfiguration::need(const std::optional<Point2>& p, const char* name) const {
    if (p) return *p;
    auto it = missing.find(name);
    throw GeometryError(ErrorCode::UndefinedPoint,
                        std::string(name) + (it != missing.end() ? ": " + it->second : ""));
}

namespace {

// intersections sorted by distance from `from`
std::vector<Point2> hits_from(const Line2& l, const Circle2& c, Point2 from, const Tolerance& tol) {
    auto pts = intersect_line_circle(l, c, tol);
    std::sort(pts.begin(), pts.end(),
              [&](Point2 x, Point2 y) { return dist(x, from) < dist(y, from); });
    return pts;
}

}  // namespace

AjimaConfiguration build_gamma(const Triangle& t, const ArcGeometry& arc, const Tolerance& tol) {
    AjimaConfiguration cfg;
    cfg.tri = t.rotated(arc.side);
    cfg.m = metrics(cfg.tri);
    cfg.arc = arc;
    const Point2 A = cfg.tri.A, B = cfg.tri.B, C = cfg.tri.C;
    const TriangleMetrics& m = cfg.m;
    cfg.scale = std::max({m.a, m.b, m.c});

    double rho = ajima_radius(m, 0, arc.t);
    if (rho < -1e-12 * m.r)
        throw GeometryError(ErrorCode::ExtendedCaseOnly,
                            "theta exceeds 2(180 - A); only the extended variant exists");
    if (rho <= 1e-12 * m.r) {
        rho = 0;
        cfg.point_circle = true;
    }
    cfg.I = bary_to_point(cfg.tri, {m.a, m.b, m.c});
    cfg.incircle = {cfg.I, m.r};
    Point2 u = unit(cfg.I - A);
    double half = m.angle(0) / 2;
    cfg.rho = rho;
    cfg.D = A + u * (rho / std::sin(half));
    cfg.gamma = {cfg.D, rho};
    cfg.T = cfg.D + (arc.O - cfg.D) * (rho / (rho + arc.R_arc));

    Line2 AB = Line2::through(A, B), AC = Line2::through(A, C), BC = Line2::through(B, C);
    cfg.E = AC.project(cfg.D);
    cfg.F_t = AB.project(cfg.D);
    cfg.H = A + unit(C - A) * (m.p - m.a);
    cfg.L = B + unit(C - B) * (m.p - m.b);
    cfg.N = arc.N;
    cfg.Mid = arc.Mid;

    auto miss = [&](const char* name, const char* why) { cfg.missing[name] = why; };

    // J: second meeting of line AC with omega, C being the first
    {
        Point2 uh = unit(A - C);
        double s = -2 * dot(uh, C - arc.O);
        if (std::abs(s) <= tol.eps(cfg.scale)) {
            miss("J", "line AC tangent to omega at C");
        } else {
            cfg.J = C + uh * s;
            cfg.j_position = s < 0 ? JPosition::BeyondC : (s > m.b ? JPosition::BeyondA : JPosition::Between);
        }
    }

    if (cfg.point_circle) {
        for (const char* n : {"Lp", "X", "Y", "Yp", "Yp_far", "Tp", "Z", "M_T", "G", "K_x"})
            miss(n, "gamma is a point circle");
    } else {
        auto al = hits_from(Line2::through(A, cfg.L), cfg.gamma, A, tol);
        if (al.size() == 2) {
            cfg.X = al[0];
            cfg.Lp = al[1];
        } else {
            miss("X", "AL does not cut gamma twice");
            miss("Lp", "AL does not cut gamma twice");
        }

        Line2 AT = Line2::through(A, cfg.T);
        auto at = hits_from(AT, cfg.gamma, cfg.T, tol);
        if (at.size() == 2) cfg.Y = at[1];
        else miss("Y", "AT tangent to gamma");
        auto ai = hits_from(AT, cfg.incircle, A, tol);
        if (ai.size() == 2) {
            cfg.Yp = ai[0];
            cfg.Yp_far = ai[1];
        } else {
            miss("Yp", "AT does not cut the incircle twice");
            miss("Yp_far", "AT does not cut the incircle twice");
        }

        if (dist(cfg.I, cfg.T) > tol.eps(cfg.scale)) {
            Line2 IT = Line2::through(cfg.I, cfg.T);
            auto it = hits_from(IT, cfg.gamma, cfg.T, tol);
            if (it.size() == 2) cfg.Tp = it[1];
            else miss("Tp", "IT tangent to gamma");
            if (auto z = intersect_lines(IT, BC)) cfg.Z = z;
            else miss("Z", "IT parallel to BC");
        } else {
            miss("Tp", "T coincides with I");
            miss("Z", "T coincides with I");
        }
        if (auto mt = intersect_lines(AT, BC)) cfg.M_T = mt;
        else miss("M_T", "AT parallel to BC");

        if (dist(cfg.E, cfg.F_t) > tol.eps(cfg.scale)) {
            Line2 EF = Line2::through(cfg.E, cfg.F_t);
            if (auto g = intersect_lines(Line2::through(A, cfg.I), EF)) cfg.G = g;
            else miss("G", "AI parallel to EF");
            auto kx = intersect_lines(EF, BC);
            if (kx && dist(*kx, cfg.Mid) < 1e6 * cfg.scale) cfg.K_x = kx;
            else miss("K_x", "EF parallel to BC (isosceles)");
        } else {
            miss("G", "E and F coincide");
            miss("K_x", "E and F coincide");
        }
    }

    if (cfg.J && dist(*cfg.J, B) > tol.eps(cfg.scale)) {
        if (auto f = intersect_lines(Line2::from_dir(cfg.I, *cfg.J - B), AC)) cfg.Fj = f;
        else miss("Fj", "BJ parallel to AC");
    } else {
        miss("Fj", "J undefined or equal to B");
    }
    return cfg;
}

Circle2 gamma_via_midarc(const Triangle& t, const ArcGeometry& arc) {
    Triangle loc = t.rotated(arc.side);
    TriangleMetrics m = metrics(loc);
    Point2 I = bary_to_point(loc, {m.a, m.b, m.c});
    auto pts = hits_from(Line2::through(arc.N, I), arc.circle(), arc.N, Tolerance{1e-12, 0});
    if (pts.size() < 2) throw GeometryError(ErrorCode::NoIntersection, "line NI misses omega");
    Point2 T = pts[1];
    auto D = intersect_lines(Line2::through(arc.O, T), Line2::through(loc.A, I));
    if (!D) throw GeometryError(ErrorCode::NoIntersection, "OT parallel to the bisector");
    return {*D, Line2::through(loc.A, loc.B).dist(*D)};
}

Circle2 ajima_oracle(const Triangle& t, const ArcGeometry& arc) {
    Triangle loc = t.rotated(arc.side);
    TriangleMetrics m = metrics(loc);
    Point2 A = loc.A;
    Point2 I = bary_to_point(loc, {m.a, m.b, m.c});
    Point2 u = unit(I - A);
    double sh = std::sin(m.angle(0) / 2);
    // g(s) = |c - O| - (rho + R), written as a difference of squares over a sum
    auto g = [&](double s) {
        Point2 c = A + u * s;
        double rho = s * sh;
        double num = arc.power(c) - rho * rho - 2 * rho * arc.R_arc;
        return num / (dist(c, arc.O) + rho + arc.R_arc);
    };
    double lo = 0, hi = dist(A, I);
    double glo = g(lo), ghi = g(hi);
    if (!(glo > 0)) throw GeometryError(ErrorCode::NoRoot, "vertex is not outside omega");
    for (int i = 0; i < 60 && ghi > 0; ++i) {
        hi *= 1.5;
        ghi = g(hi);
    }
    if (ghi > 0) throw GeometryError(ErrorCode::NoRoot, "no sign change along the bisector");
    // run until the bracket collapses; a residual test in g would cap the relative accuracy of small circles
    double mid = lo;
    for (int i = 0; i < 400; ++i) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double gm = g(mid);
        if (gm == 0) break;
        if (gm > 0) lo = mid;
        else hi = mid;
    }
    return {A + u * mid, mid * sh};
}

std::vector<std::pair<std::string, VariantCircle>> VariantCircles::all() const {
    std::vector<std::pair<std::string, VariantCircle>> out;
    if (c1) out.emplace_back("c1", *c1);
    if (c2) out.emplace_back("c2", *c2);
    if (c3) out.emplace_back("c3", *c3);
    if (c4) out.emplace_back("c4", *c4);
    for (size_t i = 0; i < extended.size(); ++i) out.emplace_back("x" + std::to_string(i + 1), extended[i]);
    return out;
}

int VariantCircles::count() const { return static_cast<int>(all().size()); }

std::optional<VariantCircle> VariantCircles::extended_internal() const {
    for (const auto& v : extended)
        if (v.kind == TangencyKind::Internal) return v;
    return std::nullopt;
}

VariantCircles variant_circles(const Triangle& t, const ArcGeometry& arc) {
    Triangle loc = t.rotated(arc.side);
    TriangleMetrics m = metrics(loc);
    Point2 A = loc.A;
    Point2 I = bary_to_point(loc, {m.a, m.b, m.c});
    Point2 u = unit(I - A);
    double sh = std::sin(m.angle(0) / 2);
    double R = arc.R_arc;
    // c2 and c3 merge through a double root, where double-precision coefficients only pin the
    // root to about 1e-8; the coefficients are rebuilt in extended precision from the vertices.
    using ld = long double;
    const ld Ax = A.x, Ay = A.y, Bx = loc.B.x, By = loc.B.y, Cx = loc.C.x, Cy = loc.C.y;
    const ld la = std::hypot(Bx - Cx, By - Cy), lb = std::hypot(Cx - Ax, Cy - Ay), lc = std::hypot(Ax - Bx, Ay - By);
    const ld Ix = (la * Ax + lb * Bx + lc * Cx) / (la + lb + lc), Iy = (la * Ay + lb * By + lc * Cy) / (la + lb + lc);
    const ld ul = std::hypot(Ix - Ax, Iy - Ay), ux = (Ix - Ax) / ul, uy = (Iy - Ay) / ul;
    const ld th = static_cast<ld>(arc.theta_deg) * 3.14159265358979323846264338327950288L / 180;
    const ld off = la / 2 * std::cos(th / 2) / std::sin(th / 2);
    ld nx = -(Cy - By) / la, ny = (Cx - Bx) / la;
    if (nx * (Ax - Bx) + ny * (Ay - By) < 0) nx = -nx, ny = -ny;
    const ld dx = Ax - (Bx + Cx) / 2, dy = Ay - (By + Cy) / 2;  // A - Mid
    const ld Rl = la / 2 / std::sin(th / 2);
    const ld cosA = (lb * lb + lc * lc - la * la) / (2 * lb * lc);
    const ld shl = std::sqrt((1 - cosA) / 2);
    const ld uw = ux * dx + uy * dy + off * (ux * nx + uy * ny);           // u.(A - O)
    const ld ww = dx * dx + dy * dy - la * la / 4 + 2 * off * (nx * dx + ny * dy);  // |A - O|^2 - R^2
    Line2 BC = Line2::through(loc.B, loc.C);
    double side_sign = BC.signed_dist(A) > 0 ? 1 : -1;

    std::vector<VariantCircle> ext, in;
    // A on omega: both families share a root at s = 0, the point circle at A
    const double s_floor = 1e-12 * static_cast<double>(std::max({la, lb, lc}));
    bool vertex_root = false;
    for (TangencyKind kind : {TangencyKind::External, TangencyKind::Internal}) {
        for (int branch : {1, -1}) {
            // rho = branch * s * sh; external |c-O| = rho + R, internal |c-O| = |R - rho|
            ld k = branch * shl * (kind == TangencyKind::External ? 1 : -1);
            ld qa = 1 - k * k, qb = 2 * (uw - k * Rl), qc = ww;
            ld disc = qb * qb - 4 * qa * qc;
            if (disc < 0) continue;
            ld sq = std::sqrt(disc);
            // numerically stable pair
            ld q = -0.5L * (qb + (qb >= 0 ? sq : -sq));
            std::vector<double> roots;
            if (q != 0) roots.push_back(static_cast<double>(q / qa)), roots.push_back(static_cast<double>(qc / q));
            else roots.push_back(0);
            for (double s : roots) {
                if (std::abs(s) <= s_floor) {
                    vertex_root = true;
                    continue;
                }
                if (!std::isfinite(s) || s * branch <= 0) continue;
                VariantCircle v;
                v.kind = kind;
                v.s = s;
                Point2 c = A + u * s;
                v.circle = {c, std::abs(s) * sh};
                double d = dist(c, arc.O);
                if (kind == TangencyKind::External) {
                    v.touch = c + (arc.O - c) * (v.circle.radius / (v.circle.radius + R));
                } else {
                    if (d <= 1e-14 * R) continue;
                    Point2 e = (c - arc.O) / d;
                    v.touch = v.circle.radius <= R ? arc.O + e * R : arc.O - e * R;
                }
                v.touch_inside = BC.signed_dist(v.touch) * side_sign > 0;
                (kind == TangencyKind::External ? ext : in).push_back(v);
            }
        }
    }
    auto by_s = [](const VariantCircle& x, const VariantCircle& y) { return x.s < y.s; };
    std::sort(ext.begin(), ext.end(), by_s);
    std::sort(in.begin(), in.end(), by_s);

    VariantCircles out;
    if (vertex_root) {
        VariantCircle v;
        v.kind = TangencyKind::External;
        v.circle = {A, 0};
        v.touch = A;
        out.c1 = v;
    }
    for (const auto& v : ext) {
        if (v.s < 0) out.extended.push_back(v);
        else if (BC.signed_dist(v.circle.center) * side_sign > 0 && !out.c1) out.c1 = v;
        else if (!out.c4) out.c4 = v;
        else out.extended.push_back(v);
    }
    std::vector<VariantCircle> pos;
    for (const auto& v : in) {
        if (v.s < 0) out.extended.push_back(v);
        else pos.push_back(v);
    }
    // c2 touches omega inside the triangle, c3 outside
    std::vector<VariantCircle> inside, outside;
    for (const auto& v : pos) (v.touch_inside ? inside : outside).push_back(v);
    if (inside.size() == 1 && outside.size() == 1) {
        out.c2 = inside[0];
        out.c3 = outside[0];
    } else if (pos.size() == 2) {
        out.c2 = pos[0];
        out.c3 = pos[1];
    } else if (pos.size() == 1) {
        (pos[0].touch_inside ? out.c2 : out.c3) = pos[0];
    }
    return out;
}

Lengths lengths(const AjimaConfiguration& cfg) {
    const TriangleMetrics& m = cfg.m;
    const Point2 A = cfg.tri.A;
    double a = m.a, b = m.b, c = m.c, p = m.p, r = m.r, t = cfg.arc.t;
    double k = a * p - (b - c) * (b - c);
    Lengths out;
    out.AK = {p - a - r * t, dist(A, cfg.E)};
    out.AL_len = {std::sqrt((p - a) * k / a), dist(A, cfg.L)};
    out.ALp_over_AL_formula = cfg.rho / r;
    out.ALp = {out.AL_len.formula * out.ALp_over_AL_formula, dist(A, cfg.need(cfg.Lp, "Lp"))};
    out.AX_len = {(p - a - r * t) * std::sqrt(a * (p - a)) / std::sqrt(k), dist(A, cfg.need(cfg.X, "X"))};
    out.AX_over_ALp_formula = a * (p - a) / k;
    out.HK = {r * t, dist(cfg.H, cfg.E)};
    out.IF_len = {r / std::sin(cfg.arc.theta / 2), dist(cfg.I, cfg.need(cfg.Fj, "Fj"))};
    return out;
}

}  // namespace ajima
