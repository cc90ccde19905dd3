#include "lorasim/stats.hpp"

#include <algorithm>
#include <cmath>

namespace lorasim {

std::pair<double, double> wilson_interval(std::uint64_t errors, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = (p + z2n / 2.0) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ErrorRateEstimate make_estimate(std::uint64_t errors, std::uint64_t trials, std::uint64_t seed) {
    ErrorRateEstimate est;
    est.errors = errors;
    est.trials = trials;
    est.rate = trials ? static_cast<double>(errors) / static_cast<double>(trials) : 0.0;
    const auto [lo, hi] = wilson_interval(errors, trials);
    est.ci_low = lo;
    est.ci_high = hi;
    est.seed = seed;
    return est;
}

}  // namespace lorasim
