#pragma once

#include <string>
#include <vector>

namespace tautdrg {

struct CheckResult {
    std::string name;
    std::string identity;  // the identity being checked, written as a formula
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = true;
    std::string detail;
};

// Ordered list of identity checks. Failures are recorded, not thrown; callers
// decide whether a failed check is fatal.
class VerificationReport {
public:
    // Records residual <= threshold as a pass.
    void add(std::string name, std::string identity, double residual, double threshold,
             std::string detail = {});
    // Records a boolean predicate (residual reported as 0 or 1).
    void add_flag(std::string name, std::string identity, bool holds, std::string detail = {});
    void append(const VerificationReport& other);

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_passed() const;
    double max_residual() const;
    const CheckResult* first_failure() const;
    std::size_t size() const { return checks_.size(); }

private:
    std::vector<CheckResult> checks_;
};

// |a - b| / max(1, |b|, scale)
double scaled_difference(double a, double b, double scale = 0.0);

}  // namespace tautdrg
