#include "lorasim/gaussian.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace lorasim {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLogSqrt2Pi = 0.9189385332046727;  // ln sqrt(2 pi)

constexpr int kCraigNodes = 32;

struct CraigTable {
    std::array<double, kCraigNodes> half_inv_sin2;
    CraigTable() {
        for (int i = 0; i < kCraigNodes; ++i) {
            const double th = (i + 0.5) * (std::numbers::pi / 2.0) / kCraigNodes;
            const double s = std::sin(th);
            half_inv_sin2[i] = 1.0 / (2.0 * s * s);
        }
    }
};

double craig_q(double x) {
    static const CraigTable tab;
    const double x2 = x * x;
    double acc = 0.0;
    for (int i = 0; i < kCraigNodes; ++i) acc += std::exp(-x2 * tab.half_inv_sin2[i]);
    return acc / (2.0 * kCraigNodes);
}

// log Phi(t) for t << 0 where erfc underflows: -t^2/2 - ln(-t sqrt(2pi)) +
// ln(1 - 1/t^2 + 3/t^4 - 15/t^6)
double log_norm_cdf_asymptotic(double t) {
    const double t2 = t * t;
    const double series = 1.0 - 1.0 / t2 + 3.0 / (t2 * t2) - 15.0 / (t2 * t2 * t2);
    return -0.5 * t2 - std::log(-t) - kLogSqrt2Pi + std::log(series);
}

constexpr double kTableLo = -40.0;
constexpr double kTableHi = 9.0;
constexpr double kTableStep = 1.0 / 2048.0;

struct LogNormCdfTable {
    std::vector<double> v;
    LogNormCdfTable() {
        const int n = static_cast<int>((kTableHi - kTableLo) / kTableStep) + 2;
        v.resize(n);
        for (int i = 0; i < n; ++i) v[i] = log_norm_cdf(kTableLo + i * kTableStep);
    }
};

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double q_power_approx(double x, int q) {
    if (q < 1) return 1.0;
    if (x < 0.0) return std::pow(q_function(x), q);
    return std::pow(craig_q(x), q);
}

double log_norm_cdf(double t) {
    if (t >= 0.0) return std::log1p(-q_function(t));
    if (t > -37.0) return std::log(0.5 * std::erfc(-t / kSqrt2));
    return log_norm_cdf_asymptotic(t);
}

double log_norm_cdf_fast(double t) {
    static const LogNormCdfTable tab;
    if (t >= kTableHi) return std::log1p(-q_function(t));
    if (t <= kTableLo) return log_norm_cdf_asymptotic(t);
    const double pos = (t - kTableLo) / kTableStep;
    const int i = static_cast<int>(pos);
    const double f = pos - i;
    return tab.v[i] * (1.0 - f) + tab.v[i + 1] * f;
}

double normal_pdf(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); }

}  // namespace lorasim
