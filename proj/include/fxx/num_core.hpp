#pragma once

// Scalar special functions shared by every pricer: the standard normal
// density, distribution and quantile, and the error functions.
//
// All functions reject non-finite input with fxx::DomainError. Probabilities
// are plain doubles in [0, 1].

namespace fxx {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kSqrt2 = 1.41421356237309504880168872421;

double std_normal_pdf(double x);

/// N(z), evaluated as erfc(-z/sqrt(2))/2 so the lower tail keeps full
/// relative accuracy.
double std_normal_cdf(double z);

/// Inverse of N on (0, 1). Wichura's AS241 rational approximation followed
/// by one Newton step on std_normal_cdf.
double inv_std_normal_cdf(double p);

/// AS241 alone, no refinement (relative error around 1e-16).
double inv_std_normal_cdf_as241(double p);

/// Acklam's rational approximation (relative error below 1.2e-9). No input
/// validation; intended for the Monte Carlo inner loop where p comes from a
/// generator that never returns 0 or 1.
double inv_std_normal_cdf_fast(double p) noexcept;

double erf(double x);
double erfc(double x);

}  // namespace fxx
