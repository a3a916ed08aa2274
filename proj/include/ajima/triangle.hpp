#pragma once

#include <array>

#include "ajima/geom.hpp"

namespace ajima {

struct Triangle {
    Point2 A, B, C;

    Point2 vertex(int i) const;
    // k=1 relabels (A,B,C) -> (B,C,A); every "similarly for b, c" formula comes from this.
    Triangle rotated(int k) const;
    double scale() const { return diameter({A, B, C}); }

    // B=(0,0), C=(a,0), A above BC.
    static Triangle from_sides(double a, double b, double c);
};

struct TriangleMetrics {
    double a = 0, b = 0, c = 0;
    double p = 0;
    double area = 0;
    double S = 0;  // twice the area
    double r = 0, R = 0;
    double W = 0;  // (4R + r) / p

    double side(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
    double angle(int i) const;      // radians, at vertex i
    double half_tan(int i) const;   // tan(angle/2) = r / (p - side)
    double S_angle(int i) const;    // Conway: S_A = (b^2 + c^2 - a^2) / 2
    TriangleMetrics rotated(int k) const;
};

struct BaryCoords {
    double u = 0, v = 0, w = 0;

    double sum() const { return u + v + w; }
    BaryCoords normalized() const;
    double operator[](int i) const { return i == 0 ? u : (i == 1 ? v : w); }
};

// projective distance between two homogeneous triples (0 when proportional)
double bary_distance(const BaryCoords& x, const BaryCoords& y);

struct ContactPoints {
    Point2 L, M_c, N_c;  // on BC, CA, AB
};

struct CevianRatios {
    double AL_len;
    double AGe_len;
    double LGe_over_AGe;
};

TriangleMetrics metrics(const Triangle& t);
Point2 incenter(const Triangle& t);
Point2 excenter(const Triangle& t, int vertex);
Point2 gergonne_point(const Triangle& t);
ContactPoints contact_points(const Triangle& t);

Point2 bary_to_point(const Triangle& t, const BaryCoords& b);
BaryCoords point_to_bary(const Triangle& t, Point2 p);

CevianRatios gergonne_cevian_ratios(const Triangle& t);

}  // namespace ajima
