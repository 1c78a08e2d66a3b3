#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace palfact {

// Outcome of one named check over an index range. A check passes when its
// violation list is empty; each violation carries the offending coordinates.
struct CheckResult {
    std::string check;
    std::uint64_t range_begin = 0;
    std::uint64_t range_end = 0;
    std::vector<nlohmann::json> violations;
    double elapsed = 0.0;  // seconds

    bool passed() const { return violations.empty(); }
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    std::size_t violation_count() const;
    void merge(VerificationReport other);
    nlohmann::json to_json() const;
};

}  // namespace palfact
