#pragma once

#include <cstdint>
#include <utility>

namespace lorasim {

struct ErrorRateEstimate {
    std::uint64_t errors = 0;
    std::uint64_t trials = 0;
    double rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::uint64_t seed = 0;
};

/// 95% Wilson score interval; always contains errors/trials.
std::pair<double, double> wilson_interval(std::uint64_t errors, std::uint64_t trials);

ErrorRateEstimate make_estimate(std::uint64_t errors, std::uint64_t trials, std::uint64_t seed);

}  // namespace lorasim
