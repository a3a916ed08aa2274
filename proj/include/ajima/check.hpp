#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ajima/geom.hpp"

namespace ajima {

enum class Outcome { Pass, Fail, NotApplicable };
const char* outcome_name(Outcome o);

struct SampleDescriptor {
    std::array<double, 3> sides{};
    std::array<double, 3> theta{};  // degrees, per side; all equal for a general triad
    std::uint64_t seed = 0;
    long index = -1;  // -1 for a hand-specified instance
};

struct CheckResult {
    std::string check_id;
    Outcome verdict = Outcome::NotApplicable;
    double residual = 0;  // dimensionless
    double tolerance = 0;
    std::string reason;  // not_applicable reason or a note
    SampleDescriptor sample;
    std::vector<std::pair<std::string, Point2>> witness;

    bool passed() const { return verdict == Outcome::Pass; }
};

// pass iff residual <= tolerance; NaN fails
CheckResult judged(std::string id, double residual, double tolerance);
CheckResult not_applicable(std::string id, std::string reason);

}  // namespace ajima
