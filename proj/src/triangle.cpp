#include "ajima/triangle.hpp"

namespace ajima {

Point2 Triangle::vertex(int i) const {
    switch (((i % 3) + 3) % 3) {
    case 0: return A;
    case 1: return B;
    default: return C;
    }
}

Triangle Triangle::rotated(int k) const { return {vertex(k), vertex(k + 1), vertex(k + 2)}; }

Triangle Triangle::from_sides(double a, double b, double c) {
    if (!(a > 0 && b > 0 && c > 0) || a >= b + c || b >= c + a || c >= a + b)
        throw GeometryError(ErrorCode::DegenerateTriangle, "side lengths violate the triangle inequality");
    double x = (a * a + c * c - b * b) / (2 * a);
    double y = std::sqrt(std::max(0.0, c * c - x * x));
    return {{x, y}, {0, 0}, {a, 0}};
}

double TriangleMetrics::angle(int i) const {
    double x = side(i), y = side((i + 1) % 3), z = side((i + 2) % 3);
    return std::acos(std::clamp((y * y + z * z - x * x) / (2 * y * z), -1.0, 1.0));
}

double TriangleMetrics::half_tan(int i) const { return r / (p - side(i)); }

double TriangleMetrics::S_angle(int i) const {
    double x = side(i), y = side((i + 1) % 3), z = side((i + 2) % 3);
    return (y * y + z * z - x * x) / 2;
}

TriangleMetrics TriangleMetrics::rotated(int k) const {
    TriangleMetrics m = *this;
    m.a = side(k % 3);
    m.b = side((k + 1) % 3);
    m.c = side((k + 2) % 3);
    return m;
}

BaryCoords BaryCoords::normalized() const {
    double s = sum();
    if (std::abs(s) <= 1e-300) throw GeometryError(ErrorCode::ZeroBary, "barycentric sum is zero");
    return {u / s, v / s, w / s};
}

double bary_distance(const BaryCoords& x, const BaryCoords& y) {
    // cross product of the two triples, normalized by both lengths
    double nx = std::sqrt(x.u * x.u + x.v * x.v + x.w * x.w);
    double ny = std::sqrt(y.u * y.u + y.v * y.v + y.w * y.w);
    if (nx == 0 || ny == 0) throw GeometryError(ErrorCode::ZeroBary, "zero barycentric triple");
    double cx = x.v * y.w - x.w * y.v, cy = x.w * y.u - x.u * y.w, cz = x.u * y.v - x.v * y.u;
    return std::sqrt(cx * cx + cy * cy + cz * cz) / (nx * ny);
}

TriangleMetrics metrics(const Triangle& t) {
    TriangleMetrics m;
    m.a = dist(t.B, t.C);
    m.b = dist(t.C, t.A);
    m.c = dist(t.A, t.B);
    double scale = std::max({m.a, m.b, m.c});
    double signed2 = cross(t.B - t.A, t.C - t.A);
    if (!(scale > 0) || std::abs(signed2) <= 1e-12 * scale * scale || !std::isfinite(signed2))
        throw GeometryError(ErrorCode::DegenerateTriangle, "vertices are collinear");
    m.p = (m.a + m.b + m.c) / 2;
    m.S = std::abs(signed2);
    m.area = m.S / 2;
    m.r = m.area / m.p;
    m.R = m.a * m.b * m.c / (4 * m.area);
    m.W = (4 * m.R + m.r) / m.p;
    return m;
}

Point2 bary_to_point(const Triangle& t, const BaryCoords& b) {
    BaryCoords n = b.normalized();
    return t.A * n.u + t.B * n.v + t.C * n.w;
}

BaryCoords point_to_bary(const Triangle& t, Point2 p) {
    double s = cross(t.B - t.A, t.C - t.A);
    if (s == 0) throw GeometryError(ErrorCode::DegenerateTriangle, "vertices are collinear");
    return {cross(t.B - p, t.C - p) / s, cross(t.C - p, t.A - p) / s, cross(t.A - p, t.B - p) / s};
}

Point2 incenter(const Triangle& t) {
    TriangleMetrics m = metrics(t);
    return bary_to_point(t, {m.a, m.b, m.c});
}

Point2 excenter(const Triangle& t, int vertex) {
    TriangleMetrics m = metrics(t);
    BaryCoords b{m.a, m.b, m.c};
    switch (vertex) {
    case 0: b.u = -b.u; break;
    case 1: b.v = -b.v; break;
    default: b.w = -b.w; break;
    }
    return bary_to_point(t, b);
}

Point2 gergonne_point(const Triangle& t) {
    TriangleMetrics m = metrics(t);
    return bary_to_point(t, {1 / (m.p - m.a), 1 / (m.p - m.b), 1 / (m.p - m.c)});
}

ContactPoints contact_points(const Triangle& t) {
    TriangleMetrics m = metrics(t);
    return {t.B + unit(t.C - t.B) * (m.p - m.b), t.C + unit(t.A - t.C) * (m.p - m.c),
            t.A + unit(t.B - t.A) * (m.p - m.a)};
}

CevianRatios gergonne_cevian_ratios(const Triangle& t) {
    TriangleMetrics m = metrics(t);
    double a = m.a, b = m.b, c = m.c, p = m.p;
    double k = a * p - (b - c) * (b - c);
    CevianRatios out;
    out.AL_len = std::sqrt((p - a) * k / a);
    out.AGe_len = (p - a) * std::sqrt(a * (p - a) * k) / (p * m.r * m.W);
    out.LGe_over_AGe = (p - b) * (p - c) / (a * (p - a));
    return out;
}

}  // namespace ajima
