#pragma once

#include <array>
#include <vector>

#include "ajima/apollonius.hpp"
#include "ajima/check.hpp"

namespace ajima {

struct TriadScalars {
    TriangleMetrics m;
    double theta_deg = 0;
    double t = 0;
    std::array<double, 3> rho{};
    std::array<double, 3> R_arc{};

    // filled from a constructed triad
    bool measured = false;
    std::array<double, 3> center_dist{};  // u = |D_b D_c|, v = |D_c D_a|, w = |D_a D_b|
    std::array<double, 3> tangent_len{};  // T_bc, T_ca, T_ab
    std::array<double, 3> d{};            // |U D_a|, |U D_b|, |U D_c|
    double rho_i = 0, rho_o = 0;
};

TriadScalars triad_scalars(const TriangleMetrics& m, double theta_deg);
// radii from the bisection oracle, distances measured on the construction
TriadScalars triad_scalars(const Triangle& t, const Triad& triad, const ApolloniusResult& res);

struct SemicircleBaseline {
    std::array<double, 3> rho_a_star{};
    std::array<double, 3> T_ab_star{};  // indexed like center_dist: bc, ca, ab
    std::array<double, 3> D_ab_star{};
    std::array<double, 3> d_a_star{};
    double rho_i_star = 0, rho_o_star = 0;
    double u_star = 0, v_star = 0, w_star = 0;
};

// t = 1 quantities. Radii are signed, so an obtuse angle gives a negative rho*
// and the centers continue along the bisector; every starred relation stays affine in t.
SemicircleBaseline semicircle_baseline(const Triangle& t);

// |lhs - rhs| over the largest-magnitude term
double identity_residual(double lhs, double rhs, std::initializer_list<double> terms);

std::vector<CheckResult> identity_suite(const TriadScalars& s, double threshold = 1e-7);
std::vector<CheckResult> radius_relation_suite(const TriadScalars& s, double threshold = 1e-7);
std::vector<CheckResult> scaling_suite(const TriadScalars& s, const SemicircleBaseline& base,
                                       double threshold = 1e-7);

}  // namespace ajima
