#pragma once

namespace lorasim {

/// Gaussian tail probability Q(x) via the complementary error function.
double q_function(double x);

/// Q(x)^q through a Craig-form exponential sum (32 midpoint nodes), exact at
/// x = 0 and monotone nonincreasing in x. Used by the binomial-series SER.
double q_power_approx(double x, int q);

/// log Phi(t), stable for arbitrarily negative t (asymptotic series past the
/// erfc underflow point).
double log_norm_cdf(double t);

/// Table-interpolated log Phi(t) (step 2^-11, absolute error < 1e-7) for the
/// quadrature inner loops; falls back to the exact path outside [-40, 9].
double log_norm_cdf_fast(double t);

/// Standard normal density.
double normal_pdf(double t);

}  // namespace lorasim
