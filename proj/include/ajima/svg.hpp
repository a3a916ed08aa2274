#pragma once

#include <array>
#include <string>
#include <vector>

#include "ajima/triangle.hpp"

namespace ajima {

struct FigureOptions {
    bool apollonius = false;
    bool soddy = false;
    bool witness = false;
    std::vector<std::string> witness_checks;  // empty: every registry check
    double px_per_unit = 100;
};

// Deterministic SVG 1.1. Throws DegenerateTriangle / ThetaOutOfRange.
std::string render_figure(const Triangle& t, const std::array<double, 3>& theta_deg,
                          const FigureOptions& opt = {});

}  // namespace ajima
