#include "ajima/apollonius.hpp"

#include <algorithm>
#include <limits>

namespace ajima {

bool Triad::equal_theta() const {
    return theta_deg[0] == theta_deg[1] && theta_deg[1] == theta_deg[2];
}

Triad build_triad(const Triangle& t, double theta_deg, const Tolerance& tol) {
    return build_triad(t, {theta_deg, theta_deg, theta_deg}, tol);
}

Triad build_triad(const Triangle& t, const std::array<double, 3>& theta_deg, const Tolerance& tol) {
    TriangleMetrics m = metrics(t);
    Triad tr;
    tr.theta_deg = theta_deg;
    for (int k = 0; k < 3; ++k) {
        if (!interior_theta(m, k, theta_deg[k]))
            throw GeometryError(ErrorCode::ExtendedCaseOnly,
                                "interior condition fails: angle >= 180 - theta/2 at vertex " +
                                    std::to_string(k));
        tr.cfg[k] = build_gamma(t, build_arc(t, k, theta_deg[k]), tol);
    }
    return tr;
}

namespace {

double triad_scale(const Triangle& t) { return t.scale(); }

ApolloniusCircle through_touch_points(const Triangle& t, const Triad& triad,
                                      const std::array<Point2, 3>& pts, bool inner,
                                      const Tolerance& tol) {
    ApolloniusCircle out;
    out.touch = pts;
    double scale = triad_scale(t);
    if (diameter({pts[0], pts[1], pts[2]}) <= 1e-9 * scale) {
        out.concurrent = true;
        out.circle = {gergonne_point(t), 0};
        out.rho = 0;
        return out;
    }
    out.circle = circle_through(pts[0], pts[1], pts[2], Tolerance{1e-14, 0});
    out.rho = out.circle.radius;
    if (inner) {
        const Circle2& g = triad.gamma(0);
        double d = dist(out.circle.center, g.center);
        double ext = std::abs(d - (g.radius + out.rho));
        double in = std::abs(d - std::abs(g.radius - out.rho));
        if (in < ext) out.rho = -out.rho;
    }
    (void)tol;
    return out;
}

}  // namespace

ApolloniusCircle inner_apollonius(const Triangle& t, const Triad& triad, const Tolerance& tol) {
    std::array<Point2, 3> pts;
    for (int k = 0; k < 3; ++k) pts[k] = triad.cfg[k].need(triad.cfg[k].Lp, "Lp");
    return through_touch_points(t, triad, pts, true, tol);
}

ApolloniusCircle outer_apollonius(const Triangle& t, const Triad& triad, const Tolerance& tol) {
    std::array<Point2, 3> pts;
    for (int k = 0; k < 3; ++k) pts[k] = triad.cfg[k].need(triad.cfg[k].X, "X");
    return through_touch_points(t, triad, pts, false, tol);
}

ApolloniusResult apollonius(const Triangle& t, const Triad& triad, const Tolerance& tol) {
    return {inner_apollonius(t, triad, tol), outer_apollonius(t, triad, tol)};
}

double rho_inner(const TriangleMetrics& m, double t_param) { return m.r * t_param * m.W - m.r; }
double rho_outer(const TriangleMetrics& m, double t_param) { return m.r * t_param * m.W / 3 + m.r; }

BaryCoords bary_D(const TriangleMetrics& m, double t) {
    double a = m.a, b = m.b, c = m.c, p = m.p, d = m.area;
    return {a * p * (p - a) + (b + c) * t * d, b * p * (p - a) - b * t * d, c * p * (p - a) - c * t * d};
}

BaryCoords bary_Oa(const TriangleMetrics& m, double theta_deg) {
    // (-a^2 : S_C + S cot(phi) : S_B + S cot(phi)) scaled by sin(phi), phi = 90 - theta/2
    double phi = kPi / 2 - deg2rad(theta_deg) / 2;
    double s = std::sin(phi), c = std::cos(phi);
    return {-m.a * m.a * s, m.S_angle(2) * s + m.S * c, m.S_angle(1) * s + m.S * c};
}

BaryCoords bary_T(const TriangleMetrics& m, double theta_deg) {
    double a = m.a, b = m.b, c = m.c, S = m.S;
    double th = deg2rad(theta_deg);
    double u = a * a - (b - c) * (b - c);
    double s4 = std::sin(th / 4), c4 = std::cos(th / 4);
    double s2 = std::sin(th / 2), c2 = std::cos(th / 2);
    double c34 = std::cos(3 * th / 4);
    double x = 2 * a * s4 * (a * u * c2 + (b + c) * u + 2 * a * S * s2);
    double y = -u * (2 * (a * a - b * c - c * c) * c2 + a * a + 2 * a * b - (b + c) * (b + c)) * s4 +
               2 * S * (a * a + b * c - c * c) * c34 + 2 * b * S * (2 * a + b - c) * c4;
    double z = -u * (2 * (a * a - b * c - b * b) * c2 + a * a + 2 * a * c - (b + c) * (b + c)) * s4 +
               2 * S * (a * a + b * c - b * b) * c34 + 2 * c * S * (2 * a - b + c) * c4;
    return {x, y, z};
}

BaryCoords bary_T_division(const TriangleMetrics& m, double theta_deg) {
    double t = std::tan(deg2rad(theta_deg) / 4);
    double rho = ajima_radius(m, 0, t);
    double R = m.a / (2 * std::sin(deg2rad(theta_deg) / 2));
    BaryCoords d = bary_D(m, t).normalized(), o = bary_Oa(m, theta_deg).normalized();
    double k = rho / (rho + R);
    return {d.u + (o.u - d.u) * k, d.v + (o.v - d.v) * k, d.w + (o.w - d.w) * k};
}

TouchBary bary_touchpoints(const TriangleMetrics& m, double t) {
    double a = m.a, b = m.b, c = m.c, p = m.p, S = m.S;
    double pa = p - a, pb = p - b, pc = p - c;
    double k = S - 2 * pb * pc * t;
    TouchBary out;
    out.U_a = {2 * a * pb * pc * t, pc * k, pb * k};
    out.V_a = {2 * pb * pc * (2 * S + a * pa * t), pa * pc * k, pa * pb * k};
    double x = (-2 * a * a * a + a * a * (b + c) + (b - c) * (b - c) * (b + c)) * t;
    double y = (a * a * a - a * a * c + a * (b * b - c * c) + c * c * c + b * b * c - 2 * b * b * b) * t;
    double z = (a * a * a - a * a * b + a * (c * c - b * b) + b * b * b + b * c * c - 2 * c * c * c) * t;
    out.U = {x - 2 * a * S, y - 2 * b * S, z - 2 * c * S};
    out.V = {x + 6 * a * S, y + 6 * b * S, z + 6 * c * S};
    return out;
}

SoddyData soddy_line(const Triangle& t, const ApolloniusResult& res) {
    TriangleMetrics m = metrics(t);
    SoddyData s;
    s.Ge = gergonne_point(t);
    s.I = incenter(t);
    s.U = res.inner.circle.center;
    s.V = res.outer.circle.center;
    s.GeI = dist(s.Ge, s.I);
    s.GeI_formula = m.r * std::sqrt(std::max(0.0, 1 - 3 / (m.W * m.W)));
    if (s.GeI <= 1e-12 * t.scale())
        throw GeometryError(ErrorCode::EquilateralDegenerate, "incenter and Gergonne point coincide");
    Point2 e = (s.I - s.Ge) / s.GeI;
    s.xU = dot(s.U - s.Ge, e) / s.GeI;
    s.xV = dot(s.V - s.Ge, e) / s.GeI;
    s.UI_over_IV = dist(s.U, s.I) / dist(s.I, s.V);
    Line2 l{s.Ge, e};
    s.collinear_residual = std::max(l.dist(s.U), l.dist(s.V));
    s.ordered = res.inner.rho < 0 ? (0 < s.xU && s.xU < 1 && 1 < s.xV)
                                  : (s.xU <= 0 && 1 < s.xV);
    return s;
}

namespace {

bool solve3(const double J[3][3], const double f[3], double x[3]) {
    double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                 J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                 J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    if (!std::isfinite(det) || std::abs(det) < 1e-300) return false;
    for (int c = 0; c < 3; ++c) {
        double M[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M[i][j] = j == c ? f[i] : J[i][j];
        x[c] = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) / det;
    }
    return true;
}

struct NewtonOut {
    bool ok = false;
    Point2 x;
    double sigma = 0;
    int iterations = 0;
    double residual = 0;
};

NewtonOut newton(const std::array<Circle2, 3>& cs, ApolloniusFamily fam, Point2 x, double scale) {
    // inner: |x - O_k| = r_k + sigma ; outer: |x - O_k| = sigma - r_k
    double rs = fam == ApolloniusFamily::Inner ? 1 : -1;
    auto eval = [&](Point2 p, double s, double f[3]) {
        double m = 0;
        for (int k = 0; k < 3; ++k) {
            f[k] = dist(p, cs[k].center) - rs * cs[k].radius - s;
            m = std::max(m, std::abs(f[k]));
        }
        return m;
    };
    double sigma = 0;
    for (int k = 0; k < 3; ++k) sigma += (dist(x, cs[k].center) - rs * cs[k].radius) / 3;
    NewtonOut out;
    double f[3];
    double fn = eval(x, sigma, f);
    for (int it = 0; it < 200; ++it) {
        out.iterations = it;
        if (fn <= 1e-12 * scale) {
            out.ok = true;
            break;
        }
        double J[3][3];
        for (int k = 0; k < 3; ++k) {
            Point2 v = x - cs[k].center;
            double d = norm(v);
            if (d == 0) return out;
            J[k][0] = v.x / d;
            J[k][1] = v.y / d;
            J[k][2] = -1;
        }
        double step[3];
        if (!solve3(J, f, step)) return out;
        double lam = 1;
        bool moved = false;
        for (int h = 0; h < 40; ++h, lam *= 0.5) {
            Point2 xn{x.x - lam * step[0], x.y - lam * step[1]};
            double sn = sigma - lam * step[2];
            double fnew[3];
            double nn = eval(xn, sn, fnew);
            if (nn < fn) {
                x = xn;
                sigma = sn;
                fn = nn;
                std::copy(fnew, fnew + 3, f);
                moved = true;
                break;
            }
        }
        if (!moved) {
            out.ok = fn <= 1e-12 * scale;
            break;
        }
    }
    out.x = x;
    out.sigma = sigma;
    out.residual = fn;
    if (fn <= 1e-12 * scale) out.ok = true;
    return out;
}

}  // namespace

GenericSolution generic_apollonius_oracle(const Circle2& c1, const Circle2& c2, const Circle2& c3,
                                          ApolloniusFamily family) {
    std::array<Circle2, 3> cs{c1, c2, c3};
    double scale = diameter({c1.center, c2.center, c3.center}) +
                   2 * std::max({c1.radius, c2.radius, c3.radius});
    double rmin = std::min({c1.radius, c2.radius, c3.radius});
    double rmax = std::max({c1.radius, c2.radius, c3.radius});

    std::vector<Point2> seeds;
    try {
        seeds.push_back(circle_through(c1.center, c2.center, c3.center, Tolerance{1e-14, 0}).center);
    } catch (const GeometryError&) {
    }
    seeds.push_back((c1.center + c2.center + c3.center) / 3);
    try {
        seeds.push_back(radical_center(c1, c2, c3));
    } catch (const GeometryError&) {
    }

    std::string diag;
    for (Point2 s : seeds) {
        NewtonOut r = newton(cs, family, s, scale);
        bool family_ok = family == ApolloniusFamily::Inner ? r.sigma > -rmin : r.sigma > rmax;
        if (r.ok && family_ok) {
            GenericSolution g;
            g.circle = {r.x, std::abs(r.sigma)};
            g.sigma = r.sigma;
            g.iterations = r.iterations;
            g.residual = r.residual;
            return g;
        }
        diag += " seed(" + std::to_string(s.x) + "," + std::to_string(s.y) + ") -> residual " +
                std::to_string(r.residual) + " sigma " + std::to_string(r.sigma) +
                (family_ok ? "" : " wrong family") + ";";
    }
    throw GeometryError(ErrorCode::SolverNoConvergence, "Apollonius Newton solve failed:" + diag);
}

MiyamotoResult miyamoto_tangency(const Triangle& t, double theta_a, double theta_b, double theta_c,
                                 double threshold) {
    Triad tr = build_triad(t, {theta_a, theta_b, theta_c});
    std::array<Circle2, 3> om;
    std::array<double, 3> th{theta_a, theta_b, theta_c};
    for (int k = 0; k < 3; ++k) om[k] = build_arc(t, k, th[k]).circle();
    MiyamotoResult out;
    out.gamma_inner = generic_apollonius_oracle(tr.gamma(0), tr.gamma(1), tr.gamma(2), ApolloniusFamily::Inner);
    out.omega_inner = generic_apollonius_oracle(om[0], om[1], om[2], ApolloniusFamily::Inner);
    out.scale = t.scale();
    out.distance = dist(out.gamma_inner.circle.center, out.omega_inner.circle.center);
    double s1 = out.gamma_inner.sigma, s2 = out.omega_inner.sigma;
    out.internal_residual = std::abs(out.distance - std::abs(std::abs(s1) - std::abs(s2)));
    out.signed_residual = std::abs(out.distance - std::abs(s1 + s2));
    out.check = judged("miyamoto_internal", out.internal_residual / out.scale, threshold);
    out.check.sample.sides = {metrics(t).a, metrics(t).b, metrics(t).c};
    out.check.sample.theta = th;
    out.check.witness = {{"U_gamma", out.gamma_inner.circle.center}, {"U_omega", out.omega_inner.circle.center}};
    if (!out.check.passed())
        out.check.reason = "signed tangency residual " + std::to_string(out.signed_residual / out.scale);
    return out;
}

}  // namespace ajima
