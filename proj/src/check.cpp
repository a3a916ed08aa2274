#include "ajima/check.hpp"

#include <cmath>

namespace ajima {

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    default: return "not_applicable";
    }
}

CheckResult judged(std::string id, double residual, double tolerance) {
    CheckResult r;
    r.check_id = std::move(id);
    r.residual = residual;
    r.tolerance = tolerance;
    r.verdict = residual <= tolerance ? Outcome::Pass : Outcome::Fail;
    return r;
}

CheckResult not_applicable(std::string id, std::string reason) {
    CheckResult r;
    r.check_id = std::move(id);
    r.verdict = Outcome::NotApplicable;
    r.reason = std::move(reason);
    return r;
}

}  // namespace ajima
