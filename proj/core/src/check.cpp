#include "tautdrg/check.hpp"

#include <algorithm>
#include <cmath>

namespace tautdrg {

void VerificationReport::add(std::string name, std::string identity, double residual,
                             double threshold, std::string detail)
{
    // NaN residuals fail.
    const bool pass = residual <= threshold;
    checks_.push_back({std::move(name), std::move(identity), residual, threshold, pass,
                       std::move(detail)});
}

void VerificationReport::add_flag(std::string name, std::string identity, bool holds,
                                  std::string detail)
{
    checks_.push_back({std::move(name), std::move(identity), holds ? 0.0 : 1.0, 0.0, holds,
                       std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

double VerificationReport::max_residual() const
{
    double worst = 0.0;
    for (const auto& c : checks_)
        worst = std::max(worst, c.residual);
    return worst;
}

const CheckResult* VerificationReport::first_failure() const
{
    for (const auto& c : checks_)
        if (!c.pass)
            return &c;
    return nullptr;
}

double scaled_difference(double a, double b, double scale)
{
    return std::abs(a - b) / std::max({1.0, std::abs(b), std::abs(scale)});
}

}  // namespace tautdrg
