#include "ajima/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ajima {

TriadScalars triad_scalars(const TriangleMetrics& m, double theta_deg) {
    TriadScalars s;
    s.m = m;
    s.theta_deg = theta_deg;
    s.t = std::tan(deg2rad(theta_deg) / 4);
    for (int k = 0; k < 3; ++k) {
        s.rho[k] = ajima_radius(m, k, s.t);
        s.R_arc[k] = m.side(k) / (2 * std::sin(deg2rad(theta_deg) / 2));
    }
    return s;
}

TriadScalars triad_scalars(const Triangle& t, const Triad& triad, const ApolloniusResult& res) {
    if (!triad.equal_theta())
        throw GeometryError(ErrorCode::ThetaOutOfRange, "identity suites need a general triad");
    TriadScalars s = triad_scalars(metrics(t), triad.theta_deg[0]);
    std::array<Circle2, 3> g;
    for (int k = 0; k < 3; ++k) {
        g[k] = ajima_oracle(t, triad.cfg[k].arc);
        s.rho[k] = g[k].radius;
        s.R_arc[k] = triad.cfg[k].arc.R_arc;
    }
    for (int k = 0; k < 3; ++k) {
        const Circle2& x = g[(k + 1) % 3];
        const Circle2& y = g[(k + 2) % 3];
        double d = dist(x.center, y.center);
        s.center_dist[k] = d;
        double dr = x.radius - y.radius;
        s.tangent_len[k] = std::sqrt(std::max(0.0, d * d - dr * dr));
        s.d[k] = dist(res.inner.circle.center, g[k].center);
    }
    s.rho_i = res.inner.rho;
    s.rho_o = res.outer.rho;
    s.measured = true;
    return s;
}

SemicircleBaseline semicircle_baseline(const Triangle& t) {
    TriangleMetrics m = metrics(t);
    SemicircleBaseline b;
    std::array<Point2, 3> D;
    for (int k = 0; k < 3; ++k) {
        Triangle loc = t.rotated(k);
        TriangleMetrics lm = m.rotated(k);
        Point2 I = bary_to_point(loc, {lm.a, lm.b, lm.c});
        double half = lm.angle(0) / 2;
        b.rho_a_star[k] = m.r * (1 - std::tan(half));
        D[k] = loc.A + unit(I - loc.A) * (b.rho_a_star[k] / std::sin(half));
    }
    b.rho_i_star = m.r * (m.W - 1);
    b.rho_o_star = m.r * (m.W / 3 + 1);
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        double d = dist(D[i], D[j]);
        double dr = b.rho_a_star[i] - b.rho_a_star[j];
        b.D_ab_star[k] = d;
        b.T_ab_star[k] = std::sqrt(std::max(0.0, d * d - dr * dr));
    }
    b.u_star = b.D_ab_star[0];
    b.v_star = b.D_ab_star[1];
    b.w_star = b.D_ab_star[2];
    // U*: |x - D_k| = rho_k* + rho_i*, differences of squares are linear in x
    double s = b.rho_i_star;
    double e[2];
    Point2 row[2];
    for (int q = 0; q < 2; ++q) {
        int k = q + 1;
        row[q] = (D[k] - D[0]) * -2.0;
        e[q] = (b.rho_a_star[k] - b.rho_a_star[0]) * (b.rho_a_star[k] + b.rho_a_star[0] + 2 * s) -
               (dot(D[k], D[k]) - dot(D[0], D[0]));
    }
    double det = cross(row[0], row[1]);
    Point2 U{(e[0] * row[1].y - e[1] * row[0].y) / det, (row[0].x * e[1] - row[1].x * e[0]) / det};
    for (int k = 0; k < 3; ++k) b.d_a_star[k] = dist(U, D[k]);
    return b;
}

double identity_residual(double lhs, double rhs, std::initializer_list<double> terms) {
    double big = std::max(std::abs(lhs), std::abs(rhs));
    for (double x : terms) big = std::max(big, std::abs(x));
    if (big == 0) return 0;
    return std::abs(lhs - rhs) / big;
}

namespace {

CheckResult make(const std::string& id, double res, double thr) { return judged(id, res, thr); }

}  // namespace

std::vector<CheckResult> identity_suite(const TriadScalars& s, double thr) {
    const double r = s.m.r, W = s.m.W, p = s.m.p, t = s.t;
    const auto& q = s.rho;
    double ea = r - q[0], eb = r - q[1], ec = r - q[2];
    double sum = q[0] + q[1] + q[2];
    double pairs = q[0] * q[1] + q[1] * q[2] + q[2] * q[0];
    double squares = q[0] * q[0] + q[1] * q[1] + q[2] * q[2];
    double prod = q[0] * q[1] * q[2];
    std::vector<CheckResult> out;
    out.push_back(make("I01_deficit_sum", identity_residual(ea + eb + ec, r * t * W, {ea, eb, ec}), thr));
    out.push_back(make("I02_deficit_pairs", identity_residual(ea * eb + eb * ec + ec * ea, r * r * t * t,
                                                   {ea * eb, eb * ec, ec * ea}), thr));
    out.push_back(make("I03_deficit_product", identity_residual(ea * eb * ec, r * r * r * r * t * t * t / p, {}), thr));
    out.push_back(make("I04_sum", identity_residual(sum, 3 * r - r * t * W, {q[0], q[1], q[2], 3 * r}), thr));
    out.push_back(make("I05_pair_sum_expanded",
                       identity_residual(3 * r * r - 2 * r * sum + pairs, r * r * t * t,
                                         {3 * r * r, 2 * r * sum, pairs}), thr));
    out.push_back(make("I06_pair_sum", identity_residual(pairs, r * r * (t * t - 2 * t * W + 3),
                                                         {q[0] * q[1], q[1] * q[2], q[2] * q[0], 3 * r * r}), thr));
    out.push_back(make("I07_square_sum",
                       identity_residual(squares, r * r * (3 - 2 * t * W + (W * W - 2) * t * t),
                                         {3 * r * r, 2 * r * r * t * W}), thr));
    out.push_back(make("I08_product",
                       identity_residual(prod, r * r * r * (1 - t * W + t * t - r / p * t * t * t),
                                         {r * r * r, r * r * r * t * W}), thr));
    return out;
}

std::vector<CheckResult> radius_relation_suite(const TriadScalars& s, double thr) {
    const TriangleMetrics& m = s.m;
    const double r = m.r, R = m.R, t = s.t;
    double formula = 0, rarr = 0, t2 = 0, special = 0;
    bool rarr_ok = false, special_ok = false;
    std::string special_note;
    for (int k = 0; k < 3; ++k) {
        double a = m.side(k), rho = s.rho[k], Ra = s.R_arc[k];
        double lhs1 = a * a * rho * rho * (2 * r - rho) * (2 * r - rho);
        double lhs2 = 16 * r * (r - rho) * (r * R - r * Ra - rho * R) * (r * R - r * Ra + rho * Ra);
        // largest monomial of the expansion: product of each factor's largest term
        double ar = std::abs(rho);
        double big1 = a * a * ar * ar * std::max(2 * r, ar) * std::max(2 * r, ar);
        double big2 = 16 * r * std::max(r, ar) * std::max({r * R, r * Ra, ar * R}) * std::max({r * R, r * Ra, ar * Ra});
        formula = std::max(formula, identity_residual(lhs1 + lhs2, 0, {big1, big2}));

        if (std::abs(r - rho) > 1e-9 * r) {
            double e = r - rho;
            double L = Ra * (e * e + r * r * t * t);
            double Rr = r * R * e * (1 + t * t);
            rarr = std::max(rarr, identity_residual(L, Rr, {}));
            double L2 = t * t * r * (R * rho + r * Ra - r * R);
            double R2 = e * (rho * Ra + r * R - r * Ra);
            t2 = std::max(t2, identity_residual(L2, R2, {t * t * r * R * rho, t * t * r * r * Ra, e * rho * Ra, e * r * R}));
            rarr_ok = true;
        }

        // theta = 360 - 4A, evaluated at that theta rather than the sample's
        double A = rad2deg(m.angle(k));
        double th = 360 - 4 * A;
        if (th > 0 && th < 360 && interior_theta(m, k, th)) {
            double tt = std::tan(deg2rad(th) / 4);
            double rh = ajima_radius(m, k, tt);
            double Rak = a / (2 * std::sin(deg2rad(th) / 2));
            special = std::max(special, identity_residual(rh, 2 * r * Rak / (R + 2 * Rak), {}));
            special_ok = true;
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make("I09_formula", formula, thr));
    out.push_back(rarr_ok ? make("I10_arc_radius_relation", rarr, thr) : not_applicable("I10_arc_radius_relation", "rho equals r (t = 0)"));
    out.push_back(rarr_ok ? make("I11_t_squared", t2, thr) : not_applicable("I11_t_squared", "rho equals r (t = 0)"));
    out.push_back(special_ok ? make("I12_theta_360_minus_4A", special, thr)
                             : not_applicable("I12_theta_360_minus_4A", "360 - 4A outside the constructible range"));
    double sx = 0;
    for (double x : {deg2rad(s.theta_deg) / 4, m.angle(0) / 2, m.angle(1) / 2, m.angle(2) / 2}) {
        double tx = std::tan(x);
        sx = std::max(sx, identity_residual(std::sin(2 * x) * (tx * tx + 1), 2 * tx, {}));
    }
    out.push_back(make("I13_sin2x", sx, thr));
    return out;
}

std::vector<CheckResult> scaling_suite(const TriadScalars& s, const SemicircleBaseline& b, double thr) {
    const TriangleMetrics& m = s.m;
    const double r = m.r, t = s.t, p = m.p;
    double r1 = 0, r2 = 0;
    for (int k = 0; k < 3; ++k) {
        int j = (k + 1) % 3;
        r1 = std::max(r1, identity_residual(s.rho[k] - r, t * (b.rho_a_star[k] - r), {s.rho[k], r}));
        r2 = std::max(r2, identity_residual(s.rho[k] - s.rho[j], t * (b.rho_a_star[k] - b.rho_a_star[j]),
                                            {s.rho[k], s.rho[j]}));
    }
    std::vector<CheckResult> out;
    out.push_back(make("S01_rho_minus_r", r1, thr));
    out.push_back(make("S02_rho_minus_rho", r2, thr));
    if (!s.measured) return out;

    double tl = 0, cd = 0, dd = 0, lem = 0, sim = 0;
    for (int k = 0; k < 3; ++k) {
        int j = (k + 1) % 3;
        tl = std::max(tl, identity_residual(s.tangent_len[k], t * b.T_ab_star[k], {}));
        cd = std::max(cd, identity_residual(s.center_dist[k], t * b.D_ab_star[k], {}));
        dd = std::max(dd, identity_residual(s.d[k] - s.d[j], t * (b.d_a_star[k] - b.d_a_star[j]), {s.d[k], s.d[j]}));
        double a = m.side(k), bb = m.side((k + 1) % 3), c = m.side((k + 2) % 3);
        double sq = a * (p - a) * (a * p - (bb - c) * (bb - c)) * t * t / (p * p);
        double meas = s.center_dist[k] * s.center_dist[k];
        lem = std::max(lem, identity_residual(meas, sq, {}));
    }
    double ratios[3] = {s.center_dist[0] / b.u_star, s.center_dist[1] / b.v_star, s.center_dist[2] / b.w_star};
    for (double x : ratios) sim = std::max(sim, identity_residual(x, t, {}));
    out.push_back(make("S03_tangent_length", tl, thr));
    out.push_back(make("S04_center_distance", cd, thr));
    out.push_back(make("S05_rho_i_plus_r",
                       identity_residual(s.rho_i + r, t * (b.rho_i_star + r), {s.rho_i, r}), thr));
    out.push_back(make("S06_rho_o_minus_r",
                       identity_residual(s.rho_o - r, t * (b.rho_o_star - r), {s.rho_o, r}), thr));
    out.push_back(make("S07_d_difference", dd, thr));
    out.push_back(make("S08_center_distance_squares", lem, thr));
    out.push_back(make("S09_similar_center_triangles", sim, thr));
    return out;
}

}  // namespace ajima
