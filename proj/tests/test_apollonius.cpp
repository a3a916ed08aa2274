#include <doctest.h>

#include <cmath>

#include "ajima/apollonius.hpp"

using namespace ajima;
using doctest::Approx;

namespace {

double theta_concurrent(const TriangleMetrics& m) { return rad2deg(4 * std::atan(1 / m.W)); }

}  // namespace

TEST_CASE("inner and outer circles of 4-5-6 at 180") {
    Triangle t = Triangle::from_sides(4, 5, 6);
    TriangleMetrics m = metrics(t);
    Triad tr = build_triad(t, 180);
    ApolloniusResult res = apollonius(t, tr);
    CHECK(res.inner.rho == Approx(m.r * (m.W - 1)).epsilon(1e-12));
    CHECK(res.inner.rho == Approx(1.04381).epsilon(1e-5));
    CHECK(res.outer.rho == Approx(m.r * (m.W / 3 + 1)).epsilon(1e-12));
    CHECK(res.outer.rho == Approx(2.11177).epsilon(1e-5));
    CHECK((res.inner.rho + m.r) / (res.outer.rho - m.r) == Approx(3).epsilon(1e-12));

    // touch points lie on both circles
    for (int k = 0; k < 3; ++k) {
        CHECK(tr.gamma(k).dist_to(res.inner.touch[k]) < 1e-9);
        CHECK(res.inner.circle.dist_to(res.inner.touch[k]) < 1e-9);
        CHECK(tr.gamma(k).dist_to(res.outer.touch[k]) < 1e-9);
        CHECK(res.outer.circle.dist_to(res.outer.touch[k]) < 1e-9);
    }

    GenericSolution gi = generic_apollonius_oracle(tr.gamma(0), tr.gamma(1), tr.gamma(2), ApolloniusFamily::Inner);
    CHECK(dist(gi.circle.center, res.inner.circle.center) < 1e-7);
    CHECK(std::abs(gi.sigma - res.inner.rho) < 1e-7);
    GenericSolution go = generic_apollonius_oracle(tr.gamma(0), tr.gamma(1), tr.gamma(2), ApolloniusFamily::Outer);
    CHECK(dist(go.circle.center, res.outer.circle.center) < 1e-7);
    CHECK(std::abs(go.circle.radius - res.outer.rho) < 1e-7);
}

TEST_CASE("equilateral triad") {
    Triangle t = Triangle::from_sides(2, 2, 2);
    TriangleMetrics m = metrics(t);
    ApolloniusResult res = apollonius(t, build_triad(t, 180));
    CHECK(res.inner.rho == Approx(m.r * (std::sqrt(3.0) - 1)).epsilon(1e-12));
    CHECK(res.inner.rho == Approx(0.4226497).epsilon(1e-7));
    CHECK(rho_inner(m, 1) == Approx(m.r * (std::sqrt(3.0) - 1)).epsilon(1e-14));
    CHECK_THROWS_AS(soddy_line(t, res), GeometryError);
}

TEST_CASE("radius closed forms") {
    TriangleMetrics m = metrics(Triangle::from_sides(4, 5, 6));
    CHECK(rho_inner(m, 0) == Approx(-m.r));
    CHECK(rho_outer(m, 0) == Approx(m.r));
    for (double tp : {0.1, 0.5, 1.0, 2.0}) {
        double ri = rho_inner(m, tp), ro = rho_outer(m, tp);
        CHECK(3 * ro == Approx(ri + 4 * m.r).epsilon(1e-13));
        double sum = ajima_radius(m, 0, tp) + ajima_radius(m, 1, tp) + ajima_radius(m, 2, tp);
        CHECK(3 * ro == Approx(2 * sum + 3 * ri).epsilon(1e-13));
    }
}

TEST_CASE("concurrent triad at t = 1/W") {
    Triangle t = Triangle::from_sides(4, 5, 6);
    TriangleMetrics m = metrics(t);
    double th = theta_concurrent(m);
    Triad tr = build_triad(t, th);
    ApolloniusCircle in = inner_apollonius(t, tr);
    CHECK(in.concurrent);
    CHECK(std::abs(in.rho) <= 1e-9 * m.r);
    CHECK(dist(in.circle.center, gergonne_point(t)) <= 1e-9 * t.scale());
    for (int k = 0; k < 3; ++k) CHECK(tr.gamma(k).dist_to(gergonne_point(t)) <= 1e-9 * t.scale());
}

TEST_CASE("barycentric forms") {
    Triangle t = Triangle::from_sides(4, 5, 6);
    TriangleMetrics m = metrics(t);

    // O at the midpoint of BC for the semicircle
    CHECK(bary_distance(bary_Oa(m, 180), {0, 1, 1}) < 1e-12);

    for (double th : {100.0, 180.0}) {
        Triad tr = build_triad(t, th);
        const AjimaConfiguration& c = tr.cfg[0];
        double tp = c.arc.t;
        CHECK(dist(bary_to_point(t, bary_D(m, tp)), c.D) <= 1e-9 * t.scale());
        CHECK(dist(bary_to_point(t, bary_Oa(m, th)), c.arc.O) <= 1e-9 * t.scale());
        CHECK(dist(bary_to_point(t, bary_T(m, th)), c.T) <= 1e-9 * t.scale());
        CHECK(dist(bary_to_point(t, bary_T_division(m, th)), c.T) <= 1e-9 * t.scale());

        ApolloniusResult res = apollonius(t, tr);
        TouchBary tb = bary_touchpoints(m, tp);
        CHECK(dist(bary_to_point(t, tb.U_a), *c.Lp) <= 1e-9 * t.scale());
        CHECK(dist(bary_to_point(t, tb.V_a), *c.X) <= 1e-9 * t.scale());
        CHECK(dist(bary_to_point(t, tb.U), res.inner.circle.center) <= 1e-9 * t.scale());
        CHECK(dist(bary_to_point(t, tb.V), res.outer.circle.center) <= 1e-9 * t.scale());
    }

    // symmetry: b = c
    TriangleMetrics iso = metrics(Triangle::from_sides(3, 5, 5));
    BaryCoords d = bary_D(iso, 0.6);
    CHECK(d.v == Approx(d.w));
    TouchBary tb = bary_touchpoints(iso, 0.6);
    CHECK(tb.U.v == Approx(tb.U.w));
    CHECK(tb.V.v == Approx(tb.V.w));

    // t -> 0: U_a is the contact point L
    BaryCoords ua = bary_touchpoints(m, 1e-9).U_a;
    CHECK(bary_distance(ua, {0, m.p - m.c, m.p - m.b}) < 1e-7);
}

TEST_CASE("soddy line") {
    Triangle t = Triangle::from_sides(4, 5, 6);
    TriangleMetrics m = metrics(t);
    SoddyData sd = soddy_line(t, apollonius(t, build_triad(t, 180)));
    CHECK(sd.UI_over_IV == Approx(3).epsilon(1e-9));
    CHECK(sd.GeI == Approx(m.r * std::sqrt(1 - 3 / (m.W * m.W))).epsilon(1e-12));
    CHECK(sd.ordered);
    CHECK(sd.collinear_residual < 1e-12);

    // tW < 1: rho_i < 0 and the order changes
    SoddyData low = soddy_line(t, apollonius(t, build_triad(t, 60)));
    CHECK(low.UI_over_IV == Approx(3).epsilon(1e-9));
    CHECK(low.ordered);
    CHECK(low.xU > 0);
}

TEST_CASE("generic solver on a symmetric frame") {
    Triangle eq = Triangle::from_sides(2, 2, 2);
    Point2 g = (eq.A + eq.B + eq.C) / 3;
    GenericSolution s = generic_apollonius_oracle({eq.A, 0.3}, {eq.B, 0.3}, {eq.C, 0.3}, ApolloniusFamily::Inner);
    CHECK(dist(s.circle.center, g) < 1e-12);
    CHECK(s.sigma == Approx(dist(eq.A, g) - 0.3).epsilon(1e-12));
}

TEST_CASE("omega circles at 120 share a point") {
    Triangle t = Triangle::from_sides(4, 5, 6);
    std::array<Circle2, 3> om;
    for (int k = 0; k < 3; ++k) om[k] = build_arc(t, k, 120).circle();
    Point2 p = radical_center(om[0], om[1], om[2]);
    for (const Circle2& c : om) CHECK(c.dist_to(p) <= 1e-9 * t.scale());
}

TEST_CASE("two inner circles: signed tangency") {
    Triangle t = Triangle::from_sides(4, 5, 6);
    for (auto th : {std::array<double, 3>{180, 180, 180}, {100, 140, 170}, {40, 90, 150}, {70, 70, 70}}) {
        MiyamotoResult r = miyamoto_tangency(t, th[0], th[1], th[2]);
        CHECK(r.signed_residual <= 1e-7 * r.scale);
    }
}

TEST_CASE("two inner circles: internal tangency holds for these inputs") {
    Triangle t = Triangle::from_sides(4, 5, 6);
    for (auto th : {std::array<double, 3>{180, 180, 180}, {100, 140, 170}}) {
        MiyamotoResult r = miyamoto_tangency(t, th[0], th[1], th[2]);
        CHECK(r.check.passed());
    }
}

// Recorded counterexample: the circles touch externally, so internal tangency fails.
TEST_CASE("two inner circles: external contact for 40,90,150") {
    MiyamotoResult r = miyamoto_tangency(Triangle::from_sides(4, 5, 6), 40, 90, 150);
    CHECK(r.signed_residual <= 1e-7 * r.scale);
    CHECK(r.internal_residual > 1e-3 * r.scale);
    CHECK(r.distance == Approx(0.5406).epsilon(1e-3));
    CHECK_FALSE(r.check.passed());
}

TEST_CASE("interior condition") {
    CHECK_THROWS_AS(build_triad(Triangle::from_sides(3, 4, 5), 180), GeometryError);
    CHECK_NOTHROW(build_triad(Triangle::from_sides(3, 4, 5), 179));
}
