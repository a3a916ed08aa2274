#include <doctest.h>

#include <cmath>

#include "ajima/geom.hpp"

using namespace ajima;
using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near(Point2 a, Point2 b, double eps = 1e-12) { return dist(a, b) <= eps; }

}  // namespace

TEST_CASE("circle through three points") {
    Circle2 c = circle_through({0, 0}, {2, 0}, {1, 1});
    CHECK(near(c.center, {1, 0}));
    CHECK(c.radius == Approx(1).epsilon(1e-12));

    c = circle_through({0, 0}, {4, 0}, {0, 3});
    CHECK(near(c.center, {2, 1.5}));
    CHECK(c.radius == Approx(2.5).epsilon(1e-12));

    try {
        circle_through({0, 0}, {1, 0}, {2, 0});
        FAIL("collinear points accepted");
    } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::CollinearInput);
    }
}

TEST_CASE("line meets circle") {
    Circle2 unit_c{{0, 0}, 1};
    auto pts = intersect_line_circle(Line2::through({-3, 0}, {3, 0}), unit_c);
    REQUIRE(pts.size() == 2);
    CHECK(near(pts[0], {-1, 0}));
    CHECK(near(pts[1], {1, 0}));

    pts = intersect_line_circle(Line2::through({-3, 1}, {3, 1}), unit_c);
    REQUIRE(pts.size() == 1);
    CHECK(near(pts[0], {0, 1}));

    CHECK(intersect_line_circle(Line2::through({-3, 2}, {3, 2}), unit_c).empty());
}

TEST_CASE("angles") {
    CHECK(angle_at({1, 0}, {0, 0}, {0, 1}) == Approx(kPi / 2).epsilon(1e-14));
    CHECK(angle_at({1, 0}, {0, 0}, {1, 0}) == Approx(0).epsilon(1e-14));
    CHECK(angle_at({1, 0}, {0, 0}, {-1, 0}) == Approx(kPi).epsilon(1e-14));
    CHECK(signed_angle({1, 0}, {0, 0}, {0, 1}) == Approx(kPi / 2));
    CHECK(signed_angle({0, 1}, {0, 0}, {1, 0}) == Approx(-kPi / 2));

    try {
        angle_at({0, 0}, {0, 0}, {1, 0});
        FAIL("zero ray accepted");
    } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::DegenerateRay);
    }
}

TEST_CASE("bisectors") {
    double s = 1 / std::sqrt(2.0);
    Line2 in = bisector({1, 0}, {0, 0}, {0, 1}, BisectorKind::Internal);
    CHECK(in.dist({0, 0}) < 1e-15);
    CHECK(std::abs(cross(in.d, {s, s})) < 1e-15);

    Line2 ex = bisector({1, 0}, {0, 0}, {0, 1}, BisectorKind::External);
    CHECK(std::abs(cross(ex.d, {s, -s})) < 1e-15);

    Line2 flat = bisector({1, 0}, {0, 0}, {-1, 0}, BisectorKind::Internal);
    CHECK(std::abs(flat.d.x) < 1e-15);
    CHECK(std::abs(flat.d.y) == Approx(1));
}

TEST_CASE("predicates") {
    Verdict v = is_collinear({0, 0}, {1, 1}, {2, 2});
    CHECK(v.ok);
    CHECK(v.residual == 0);
    CHECK_FALSE(is_collinear({0, 0}, {1, 1}, {2, 2.01}).ok);

    CHECK(is_concyclic({1, 0}, {0, 1}, {-1, 0}, {0, -1}).ok);
    CHECK_FALSE(is_concyclic({1, 0}, {0, 1}, {-1, 0}, {0, -1.1}).ok);

    Line2 x0 = Line2::from_dir({0, 0}, {0, 1});
    Line2 y0 = Line2::from_dir({0, 0}, {1, 0});
    Line2 diag = Line2::through({0, 1}, {1, 2});
    CHECK_FALSE(are_concurrent(x0, y0, diag).ok);
    CHECK(are_concurrent(x0, y0, Line2::through({-1, -1}, {1, 1})).ok);

    CHECK(is_parallel(diag, Line2::through({0, 0}, {3, 3})).ok);
    CHECK(is_perpendicular(x0, y0).ok);
    CHECK_FALSE(is_perpendicular(x0, diag).ok);
}

TEST_CASE("tangency of two circles") {
    Tangency t = tangency({{0, 0}, 1}, {{3, 0}, 2});
    CHECK(t.kind == TangencyKind::External);
    REQUIRE(t.touch);
    CHECK(near(*t.touch, {1, 0}));

    t = tangency({{0, 0}, 3}, {{1, 0}, 2});
    CHECK(t.kind == TangencyKind::Internal);
    REQUIRE(t.touch);
    CHECK(near(*t.touch, {3, 0}));

    t = tangency({{0, 0}, 1}, {{5, 0}, 1});
    CHECK(t.kind == TangencyKind::None);
    CHECK(t.residual == Approx(3));
}

TEST_CASE("radical axis and center") {
    Line2 ax = radical_axis({{0, 0}, 1}, {{4, 0}, 1});
    CHECK(ax.p.x == Approx(2));
    CHECK(std::abs(ax.d.x) < 1e-15);

    Point2 rc = radical_center({{0, 0}, 0.5}, {{2, 0}, 0.5}, {{1, 2}, 0.5});
    Point2 cc = circle_through({0, 0}, {2, 0}, {1, 2}).center;
    CHECK(near(rc, cc));

    try {
        radical_axis({{0, 0}, 1}, {{0, 0}, 2});
        FAIL("concentric circles accepted");
    } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::ConcentricCircles);
    }
}

TEST_CASE("homothety") {
    CHECK(near(homothety({0, 0}, 2, Point2{1, 1}), {2, 2}));
    CHECK(near(homothety({3, -1}, 1, Point2{0.25, 7}), {0.25, 7}));
    Circle2 c = homothety({0, 0}, -1, Circle2{{2, 0}, 1});
    CHECK(near(c.center, {-2, 0}));
    CHECK(c.radius == Approx(1));
}

TEST_CASE("tolerance floor") {
    Tolerance tol;
    CHECK(tol.eps(1) == Approx(1e-9));
    CHECK(tol.eps(1e-6) == Approx(1e-12));
}

TEST_CASE("homothety rejects a zero ratio") {
    CHECK_THROWS_AS(homothety({0, 0}, 0, Point2{1, 1}), GeometryError);
}
