#pragma once

#include <array>

#include "ajima/ajima.hpp"
#include "ajima/check.hpp"

namespace ajima {

struct Triad {
    std::array<AjimaConfiguration, 3> cfg;  // cfg[k] is built on t.rotated(k)
    std::array<double, 3> theta_deg{};

    const Circle2& gamma(int k) const { return cfg[k].gamma; }
    bool equal_theta() const;
};

// Throws ExtendedCaseOnly unless every angle is below 180 - theta_k/2.
Triad build_triad(const Triangle& t, double theta_deg, const Tolerance& tol = {});
Triad build_triad(const Triangle& t, const std::array<double, 3>& theta_deg, const Tolerance& tol = {});

struct ApolloniusCircle {
    Circle2 circle;
    double rho = 0;  // signed for the inner circle
    std::array<Point2, 3> touch;
    bool concurrent = false;  // triad circles share a point; circle is that point
};

struct ApolloniusResult {
    ApolloniusCircle inner, outer;
};

ApolloniusCircle inner_apollonius(const Triangle& t, const Triad& triad, const Tolerance& tol = {});
ApolloniusCircle outer_apollonius(const Triangle& t, const Triad& triad, const Tolerance& tol = {});
ApolloniusResult apollonius(const Triangle& t, const Triad& triad, const Tolerance& tol = {});

double rho_inner(const TriangleMetrics& m, double t_param);
double rho_outer(const TriangleMetrics& m, double t_param);

BaryCoords bary_D(const TriangleMetrics& m, double t_param);
BaryCoords bary_Oa(const TriangleMetrics& m, double theta_deg);
BaryCoords bary_T(const TriangleMetrics& m, double theta_deg);
// T as the point dividing D -> O_a in the ratio rho_a : R_a, from bary_D and bary_Oa
BaryCoords bary_T_division(const TriangleMetrics& m, double theta_deg);

struct TouchBary {
    BaryCoords U_a, U, V_a, V;
};
TouchBary bary_touchpoints(const TriangleMetrics& m, double t_param);

struct SoddyData {
    Point2 Ge, I, U, V;
    double GeI = 0;            // measured |G_e I|
    double GeI_formula = 0;    // r sqrt(1 - 3/W^2)
    double UI_over_IV = 0;
    double xU = 0, xV = 0;     // signed positions along G_e -> I, in units of |G_e I|
    double collinear_residual = 0;
    bool ordered = false;      // G_e, U, I, V when rho_i < 0; U, G_e, I, V otherwise
};

SoddyData soddy_line(const Triangle& t, const ApolloniusResult& res);

enum class ApolloniusFamily { Inner, Outer };

struct GenericSolution {
    Circle2 circle;
    double sigma = 0;  // inner: |x - O_k| = r_k + sigma ; outer: |x - O_k| = sigma - r_k
    int iterations = 0;
    double residual = 0;
};

GenericSolution generic_apollonius_oracle(const Circle2& c1, const Circle2& c2, const Circle2& c3,
                                          ApolloniusFamily family);

struct MiyamotoResult {
    GenericSolution gamma_inner, omega_inner;
    double distance = 0;
    double internal_residual = 0;  // | d - | |s1| - |s2| | |
    double signed_residual = 0;    // | d - |s1 + s2| |
    double scale = 0;
    CheckResult check;             // internal tangency, normalized by scale
};

MiyamotoResult miyamoto_tangency(const Triangle& t, double theta_a, double theta_b, double theta_c,
                                 double threshold = 1e-7);

}  // namespace ajima
