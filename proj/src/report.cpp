#include "palfact/report.hpp"

#include <utility>

namespace palfact {

bool VerificationReport::ok() const {
    return violation_count() == 0;
}

std::size_t VerificationReport::violation_count() const {
    std::size_t count = 0;
    for (const CheckResult& check : checks) {
        count += check.violations.size();
    }
    return count;
}

void VerificationReport::merge(VerificationReport other) {
    for (CheckResult& check : other.checks) {
        checks.push_back(std::move(check));
    }
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const CheckResult& check : checks) {
        out.push_back({{"check", check.check},
                       {"range", {check.range_begin, check.range_end}},
                       {"violations", check.violations},
                       {"elapsed", check.elapsed}});
    }
    return out;
}

}  // namespace palfact
