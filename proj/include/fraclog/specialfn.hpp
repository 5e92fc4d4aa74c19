#pragma once

namespace fraclog {

/// Natural log of the gamma function for x > 0.
///
/// Coefficient-based (Lanczos) evaluation, accurate to better than 1e-13
/// relative over [1e-3, 1e7]; arguments below 1/2 are shifted upward through
/// the recurrence Gamma(x+1) = x Gamma(x) before the core series is applied.
/// Throws std::domain_error for non-positive or non-finite arguments.
double log_gamma(double x);

/// log(Gamma(num) / Gamma(den)) without forming the gamma values.
double gamma_ratio_log(double num, double den);

/// ln[sqrt(2 pi / x) (x/e)^x], the leading Stirling approximant of Gamma.
/// Intended for asymptotic cross-checks only, never for exact constants.
double stirling_log_gamma(double x);

/// ln of the surface measure of the unit sphere in R^n,
/// omega_{n-1} = 2 pi^{n/2} / Gamma(n/2).
double sphere_surface_log(int n);

}  // namespace fraclog
