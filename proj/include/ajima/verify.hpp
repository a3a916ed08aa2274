#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ajima/check.hpp"
#include "ajima/triangle.hpp"

namespace ajima {

enum class SampleConstraint { Interior, Any };

struct SamplePolicy {
    std::uint64_t seed = 42;
    long trials = 1000;
    double theta_lo = 20, theta_hi = 340;  // degrees
    SampleConstraint constraint = SampleConstraint::Interior;
    double side_ratio_cap = 10;
    double threshold = 1e-7;
    std::map<std::string, double> overrides;  // per-check pass thresholds

    // a single hand-specified instance instead of sampling
    std::optional<std::array<double, 3>> sides;
    std::optional<double> theta;

    double threshold_for(const std::string& id) const;
};

struct Sample {
    Triangle tri;
    SampleDescriptor desc;
};

// Sample i depends only on (seed, i), so any index can be replayed alone.
Sample draw_sample(const SamplePolicy& policy, long index);
std::vector<Sample> draw_samples(const SamplePolicy& policy);

const std::vector<std::string>& registry_ids();
bool has_check(const std::string& id);

// Throws UnknownCheckId; DegenerateTriangle propagates, other construction failures become NA.
CheckResult run_check(const std::string& id, const Triangle& t, double theta_deg,
                      const Tolerance& tol = {}, double threshold = 1e-7);
// Shares one construction across several checks.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const Triangle& t,
                                    double theta_deg, const Tolerance& tol = {},
                                    const SamplePolicy& policy = {});

struct CheckSummary {
    std::string id;
    long pass = 0, fail = 0, na = 0;
    double max_residual = 0;
    std::optional<SampleDescriptor> worst_sample;
    std::vector<CheckResult> failures;  // first few, replayable from their descriptors
    std::map<std::string, long> na_reasons;

    double na_rate() const;
};

struct SuiteReport {
    SamplePolicy policy;
    Tolerance tol;
    long samples = 0;
    std::vector<CheckSummary> per_check;

    long total_fail() const;
};

SuiteReport run_suite(const SamplePolicy& policy, const std::vector<std::string>& ids = {},
                      const Tolerance& tol = {});

nlohmann::ordered_json descriptor_json(const SampleDescriptor& d);
nlohmann::ordered_json report_json(const SuiteReport& r);
std::string report_text(const SuiteReport& r);

}  // namespace ajima
