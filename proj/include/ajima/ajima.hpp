#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ajima/geom.hpp"
#include "ajima/triangle.hpp"

namespace ajima {

constexpr double kPi = 3.14159265358979323846;
inline double deg2rad(double d) { return d * kPi / 180; }
inline double rad2deg(double r) { return r * 180 / kPi; }

// Arc of measure theta erected on one side, bulging toward the opposite vertex.
struct ArcGeometry {
    int side = 0;  // 0: BC (a), 1: CA (b), 2: AB (c)
    double theta_deg = 0;
    double theta = 0;  // radians
    double t = 0;      // tan(theta/4)
    Point2 O;
    double R_arc = 0;
    Point2 N;       // midpoint of the arc on the far side from T
    Point2 Mid;     // midpoint of the chord
    Point2 normal;  // unit normal of the chord pointing to the opposite vertex
    double half_chord = 0;
    double offset = 0;  // O = Mid - normal * offset, offset = (a/2) cot(theta/2)
    std::array<double, 3> R_forms{};  // csc form, t form, circumradius form

    Circle2 circle() const { return {O, R_arc}; }
    // power of q w.r.t. the arc circle, computed without the R^2 cancellation
    double power(Point2 q) const;
};

ArcGeometry build_arc(const Triangle& t, int side, double theta_deg);

// Signed; negative exactly when theta > 2(180 - angle at vertex).
double ajima_radius(const TriangleMetrics& m, int vertex, double t_param);
std::array<double, 3> ajima_radius_forms(const TriangleMetrics& m, int vertex, double t_param);

// theta is interior for vertex i when angle_i < 180 - theta/2
bool interior_theta(const TriangleMetrics& m, int vertex, double theta_deg);

enum class JPosition { Between, BeyondC, BeyondA, Absent };
const char* jposition_name(JPosition p);

struct AjimaConfiguration {
    Triangle tri;  // relabeled so that tri.A is the vertex opposite the arc's side
    TriangleMetrics m;
    ArcGeometry arc;
    double scale = 0;

    Point2 I;
    Circle2 incircle;
    Point2 D;
    double rho = 0;
    Circle2 gamma;
    bool point_circle = false;  // rho == 0: gamma collapses onto A

    Point2 T, E, F_t, H, L, N, Mid;
    std::optional<Point2> J;
    JPosition j_position = JPosition::Absent;
    std::optional<Point2> Lp, X, Y, Yp, Yp_far, Tp, Z, M_T, G, K_x;
    std::optional<Point2> Fj;  // (parallel to BJ through I) meets AC
    std::map<std::string, std::string> missing;

    Point2 need(const std::optional<Point2>& p, const char* name) const;
};

AjimaConfiguration build_gamma(const Triangle& t, const ArcGeometry& arc, const Tolerance& tol = {});

// Route through the far arc midpoint: line N-I meets omega at T, line O-T meets the bisector at D.
Circle2 gamma_via_midarc(const Triangle& t, const ArcGeometry& arc);

// Bisection along the bisector, no closed form.
Circle2 ajima_oracle(const Triangle& t, const ArcGeometry& arc);

struct VariantCircle {
    Circle2 circle;
    TangencyKind kind = TangencyKind::None;
    double s = 0;  // signed position of the center along the bisector from A
    Point2 touch;
    bool touch_inside = false;  // touch point on A's side of BC
};

struct VariantCircles {
    std::optional<VariantCircle> c1, c2, c3, c4;
    std::vector<VariantCircle> extended;  // centers on the far side of A

    std::vector<std::pair<std::string, VariantCircle>> all() const;
    int count() const;
    // outside the angle's triangle side, internally tangent; exists when theta > 2(180 - A)
    std::optional<VariantCircle> extended_internal() const;
};

VariantCircles variant_circles(const Triangle& t, const ArcGeometry& arc);

struct LengthPair {
    double formula = 0;
    double measured = 0;
    double residual() const { return std::abs(formula - measured); }
};

struct Lengths {
    LengthPair AK, AL_len, ALp, AX_len, HK, IF_len;
    double ALp_over_AL_formula = 0;  // rho / r
    double AX_over_ALp_formula = 0;  // a(p-a) / (ap - (b-c)^2)
};

Lengths lengths(const AjimaConfiguration& cfg);

}  // namespace ajima
