#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ajima {

enum class ErrorCode {
    CollinearInput,
    DegenerateRay,
    ConcentricAmbiguous,
    ConcentricCircles,
    CollinearCenters,
    ZeroRatio,
    DegenerateTriangle,
    ZeroBary,
    ThetaOutOfRange,
    ExtendedCaseOnly,
    NoIntersection,
    UndefinedPoint,
    NoRoot,
    SolverNoConvergence,
    EquilateralDegenerate,
    UnknownCheckId,
};

const char* error_name(ErrorCode c);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode c, const std::string& what)
        : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct Point2 {
    double x = 0, y = 0;

    Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    Point2 operator-() const { return {-x, -y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    Point2 operator/(double s) const { return {x / s, y / s}; }
    Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point2 operator*(double s, Point2 p) { return p * s; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }
inline Point2 midpoint(Point2 a, Point2 b) { return (a + b) * 0.5; }
Point2 unit(Point2 a);

struct Line2 {
    Point2 p;
    Point2 d;  // unit

    static Line2 through(Point2 a, Point2 b);
    static Line2 from_dir(Point2 p, Point2 dir);
    Point2 at(double s) const { return p + d * s; }
    Point2 project(Point2 q) const { return p + d * dot(q - p, d); }
    double signed_dist(Point2 q) const { return cross(d, q - p); }
    double dist(Point2 q) const { return std::abs(signed_dist(q)); }
};

struct Circle2 {
    Point2 center;
    double radius = 0;

    double power(Point2 q) const;
    double dist_to(Point2 q) const { return std::abs(dist(q, center) - radius); }
};

struct Tolerance {
    double rel = 1e-9;
    double abs_floor = 1e-12;

    double eps(double scale) const { return std::max(rel * scale, abs_floor); }
};

// Boolean verdict plus the residual it was decided from.
struct Verdict {
    bool ok = false;
    double residual = 0;
    explicit operator bool() const { return ok; }
};

double diameter(const std::vector<Point2>& pts);

Circle2 circle_through(Point2 p1, Point2 p2, Point2 p3, const Tolerance& tol = {});

// 0..2 points; a tangent line yields exactly one.
std::vector<Point2> intersect_line_circle(const Line2& l, const Circle2& c,
                                          const Tolerance& tol = {});
std::optional<Point2> intersect_lines(const Line2& l1, const Line2& l2);

double angle_at(Point2 p, Point2 vertex, Point2 q);
double signed_angle(Point2 p, Point2 vertex, Point2 q);  // ccw from p to q, (-pi,pi]
double line_angle(const Line2& l1, const Line2& l2);     // in [0,pi/2]

enum class BisectorKind { Internal, External };
Line2 bisector(Point2 p, Point2 vertex, Point2 q, BisectorKind kind);

// scale <= 0 means "derive from the inputs".
Verdict is_collinear(Point2 a, Point2 b, Point2 c, const Tolerance& tol = {}, double scale = 0);
Verdict is_concyclic(Point2 a, Point2 b, Point2 c, Point2 d, const Tolerance& tol = {},
                     double scale = 0);
Verdict are_concurrent(const Line2& l1, const Line2& l2, const Line2& l3,
                       const Tolerance& tol = {}, double scale = 0);
Verdict is_parallel(const Line2& l1, const Line2& l2, const Tolerance& tol = {});
Verdict is_perpendicular(const Line2& l1, const Line2& l2, const Tolerance& tol = {});

enum class TangencyKind { None, External, Internal };
const char* tangency_name(TangencyKind k);

struct Tangency {
    TangencyKind kind = TangencyKind::None;
    std::optional<Point2> touch;
    double residual = 0;  // distance mismatch for the closest kind
};

Tangency tangency(const Circle2& c1, const Circle2& c2, const Tolerance& tol = {},
                  double scale = 0);

Line2 radical_axis(const Circle2& c1, const Circle2& c2);
Point2 radical_center(const Circle2& c1, const Circle2& c2, const Circle2& c3);

Point2 homothety(Point2 center, double ratio, Point2 subject);
Circle2 homothety(Point2 center, double ratio, const Circle2& subject);

}  // namespace ajima
