#include "ajima/geom.hpp"

#include <array>
#include <limits>

namespace ajima {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::ConcentricAmbiguous: return "ConcentricAmbiguous";
    case ErrorCode::ConcentricCircles: return "ConcentricCircles";
    case ErrorCode::CollinearCenters: return "CollinearCenters";
    case ErrorCode::ZeroRatio: return "ZeroRatio";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::ZeroBary: return "ZeroBary";
    case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::ExtendedCaseOnly: return "ExtendedCaseOnly";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::UndefinedPoint: return "UndefinedPoint";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::SolverNoConvergence: return "SolverNoConvergence";
    case ErrorCode::EquilateralDegenerate: return "EquilateralDegenerate";
    case ErrorCode::UnknownCheckId: return "UnknownCheckId";
    }
    return "Unknown";
}

const char* tangency_name(TangencyKind k) {
    switch (k) {
    case TangencyKind::External: return "external";
    case TangencyKind::Internal: return "internal";
    default: return "none";
    }
}

Point2 unit(Point2 a) {
    double n = norm(a);
    if (n == 0) throw GeometryError(ErrorCode::DegenerateRay, "zero vector has no direction");
    return a / n;
}

Line2 Line2::through(Point2 a, Point2 b) { return {a, unit(b - a)}; }
Line2 Line2::from_dir(Point2 p, Point2 dir) { return {p, unit(dir)}; }

double Circle2::power(Point2 q) const {
    Point2 v = q - center;
    return dot(v, v) - radius * radius;
}

double diameter(const std::vector<Point2>& pts) {
    double d = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, dist(pts[i], pts[j]));
    return d;
}

namespace {

double pick_scale(double scale, const std::vector<Point2>& pts) {
    return scale > 0 ? scale : diameter(pts);
}

// distance of c from line ab, using the longest pair as the base
double collinear_residual(Point2 a, Point2 b, Point2 c) {
    std::array<Point2, 3> p{a, b, c};
    double best = 0;
    int bi = 0;
    for (int i = 0; i < 3; ++i) {
        double d = dist(p[i], p[(i + 1) % 3]);
        if (d > best) { best = d; bi = i; }
    }
    if (best == 0) return 0;
    Point2 u = p[bi], v = p[(bi + 1) % 3], w = p[(bi + 2) % 3];
    return std::abs(cross(v - u, w - u)) / best;
}

}  // namespace

Circle2 circle_through(Point2 p1, Point2 p2, Point2 p3, const Tolerance& tol) {
    double scale = diameter({p1, p2, p3});
    if (collinear_residual(p1, p2, p3) <= tol.eps(scale))
        throw GeometryError(ErrorCode::CollinearInput, "circle_through: points are collinear");
    // solve relative to p1 for conditioning
    Point2 b = p2 - p1, c = p3 - p1;
    double d = 2 * cross(b, c);
    double bb = dot(b, b), cc = dot(c, c);
    Point2 o{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
    return {p1 + o, norm(o)};
}

std::vector<Point2> intersect_line_circle(const Line2& l, const Circle2& c, const Tolerance& tol) {
    Point2 f = l.project(c.center);
    double h = dist(f, c.center);
    double eps = tol.eps(std::max(c.radius, h));
    if (h > c.radius + eps) return {};
    if (std::abs(h - c.radius) <= eps) return {f};
    double s = std::sqrt((c.radius - h) * (c.radius + h));
    return {f - l.d * s, f + l.d * s};
}

std::optional<Point2> intersect_lines(const Line2& l1, const Line2& l2) {
    double den = cross(l1.d, l2.d);
    if (std::abs(den) < 1e-15) return std::nullopt;
    double s = cross(l2.p - l1.p, l2.d) / den;
    return l1.at(s);
}

namespace {
void check_rays(Point2 p, Point2 v, Point2 q) {
    double a = dist(p, v), b = dist(q, v);
    double s = std::max({a, b, norm(v), 1.0});
    if (a <= 1e-14 * s || b <= 1e-14 * s)
        throw GeometryError(ErrorCode::DegenerateRay, "ray of near-zero length");
}
}  // namespace

double angle_at(Point2 p, Point2 vertex, Point2 q) {
    check_rays(p, vertex, q);
    Point2 u = p - vertex, w = q - vertex;
    return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

double signed_angle(Point2 p, Point2 vertex, Point2 q) {
    check_rays(p, vertex, q);
    Point2 u = p - vertex, w = q - vertex;
    return std::atan2(cross(u, w), dot(u, w));
}

double line_angle(const Line2& l1, const Line2& l2) {
    return std::atan2(std::abs(cross(l1.d, l2.d)), std::abs(dot(l1.d, l2.d)));
}

Line2 bisector(Point2 p, Point2 vertex, Point2 q, BisectorKind kind) {
    check_rays(p, vertex, q);
    Point2 u = unit(p - vertex), w = unit(q - vertex);
    Point2 s = u + w;
    Point2 dir = norm(s) < 1e-12 ? perp(u) : unit(s);
    if (kind == BisectorKind::External) dir = perp(dir);
    return {vertex, dir};
}

Verdict is_collinear(Point2 a, Point2 b, Point2 c, const Tolerance& tol, double scale) {
    double res = collinear_residual(a, b, c);
    return {res <= tol.eps(pick_scale(scale, {a, b, c})), res};
}

Verdict is_concyclic(Point2 a, Point2 b, Point2 c, Point2 d, const Tolerance& tol, double scale) {
    std::array<Point2, 4> p{a, b, c, d};
    // circle through the best-conditioned triple, residual of the leftover point
    int skip = -1;
    double best = -1;
    for (int k = 0; k < 4; ++k) {
        std::array<Point2, 3> q;
        int n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != k) q[n++] = p[i];
        double cr = collinear_residual(q[0], q[1], q[2]);
        if (cr > best) { best = cr; skip = k; }
    }
    double s = pick_scale(scale, {a, b, c, d});
    std::array<Point2, 3> q;
    int n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != skip) q[n++] = p[i];
    if (best <= 1e-14 * std::max(s, 1e-300)) {
        // all four on a line: a degenerate "circle"
        double res = collinear_residual(q[0], q[1], p[skip]);
        return {res <= tol.eps(s), res};
    }
    Circle2 cc = circle_through(q[0], q[1], q[2], Tolerance{1e-15, 0});
    double res = cc.dist_to(p[skip]);
    return {res <= tol.eps(s), res};
}

Verdict are_concurrent(const Line2& l1, const Line2& l2, const Line2& l3, const Tolerance& tol,
                       double scale) {
    std::array<const Line2*, 3> L{&l1, &l2, &l3};
    int bi = 0;
    double best = -1;
    for (int i = 0; i < 3; ++i) {
        double c = std::abs(cross(L[i]->d, L[(i + 1) % 3]->d));
        if (c > best) { best = c; bi = i; }
    }
    auto x = intersect_lines(*L[bi], *L[(bi + 1) % 3]);
    if (!x) return {false, std::numeric_limits<double>::infinity()};
    double res = L[(bi + 2) % 3]->dist(*x);
    double s = pick_scale(scale, {l1.p, l2.p, l3.p, *x});
    return {res <= tol.eps(s), res};
}

Verdict is_parallel(const Line2& l1, const Line2& l2, const Tolerance& tol) {
    double res = std::abs(cross(l1.d, l2.d));
    return {res <= tol.eps(1.0), res};
}

Verdict is_perpendicular(const Line2& l1, const Line2& l2, const Tolerance& tol) {
    double res = std::abs(dot(l1.d, l2.d));
    return {res <= tol.eps(1.0), res};
}

Tangency tangency(const Circle2& c1, const Circle2& c2, const Tolerance& tol, double scale) {
    double d = dist(c1.center, c2.center);
    double r1 = c1.radius, r2 = c2.radius;
    double s = scale > 0 ? scale : std::max({d + r1 + r2, 2 * r1, 2 * r2});
    double eps = tol.eps(s);
    if (d <= eps && std::abs(r1 - r2) <= eps)
        throw GeometryError(ErrorCode::ConcentricAmbiguous, "coincident circles");
    double ext = std::abs(d - (r1 + r2));
    double in = std::abs(d - std::abs(r1 - r2));
    Tangency out;
    if (ext <= eps && ext <= in) {
        out.kind = TangencyKind::External;
        out.residual = ext;
        out.touch = r1 + r2 > 0 ? c1.center + (c2.center - c1.center) * (r1 / (r1 + r2)) : c1.center;
    } else if (in <= eps) {
        out.kind = TangencyKind::Internal;
        out.residual = in;
        Point2 u = d > 0 ? (c2.center - c1.center) / d : Point2{1, 0};
        out.touch = r1 >= r2 ? c1.center + u * r1 : c1.center - u * r1;
    } else {
        out.residual = std::min(ext, in);
    }
    return out;
}

Line2 radical_axis(const Circle2& c1, const Circle2& c2) {
    Point2 v = c2.center - c1.center;
    double d = norm(v);
    double s = std::max({d, c1.radius, c2.radius});
    if (d <= 1e-14 * std::max(s, 1e-300))
        throw GeometryError(ErrorCode::ConcentricCircles, "radical axis of concentric circles");
    Point2 u = v / d;
    double x = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2 * d);
    return {c1.center + u * x, perp(u)};
}

Point2 radical_center(const Circle2& c1, const Circle2& c2, const Circle2& c3) {
    Point2 o = c1.center;
    Point2 b = c2.center - o, c = c3.center - o;
    double s = diameter({c1.center, c2.center, c3.center});
    if (collinear_residual(c1.center, c2.center, c3.center) <= 1e-12 * s)
        throw GeometryError(ErrorCode::CollinearCenters, "radical center of collinear centers");
    // 2 b.x = |b|^2 - r2^2 + r1^2 (x relative to c1.center)
    double r1 = c1.radius * c1.radius;
    double e1 = (dot(b, b) - c2.radius * c2.radius + r1) / 2;
    double e2 = (dot(c, c) - c3.radius * c3.radius + r1) / 2;
    double det = cross(b, c);
    return o + Point2{(e1 * c.y - e2 * b.y) / det, (b.x * e2 - c.x * e1) / det};
}

Point2 homothety(Point2 center, double ratio, Point2 subject) {
    if (ratio == 0 || !std::isfinite(ratio))
        throw GeometryError(ErrorCode::ZeroRatio, "homothety ratio must be finite and nonzero");
    return center + (subject - center) * ratio;
}

Circle2 homothety(Point2 center, double ratio, const Circle2& subject) {
    return {homothety(center, ratio, subject.center), subject.radius * std::abs(ratio)};
}

}  // namespace ajima
