#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fraclog/grid_field.hpp"
#include "fraclog/radial_profile.hpp"

namespace fraclog {

/// Symbol (2 pi |xi|)^s tabulated on the discrete frequency lattice
/// xi in (1/2L) {-N/2, ..., N/2-1}^d; exactly zero at the zero frequency.
struct FreqMultiplier {
  double order;
  int dim;
  double half_width;
  std::size_t points_per_axis;
  std::vector<double> values;  // row-major, same layout as GridField samples

  static FreqMultiplier make(int dim, double half_width,
                             std::size_t points_per_axis, double order);

  /// (-Delta)^{order/2} f realized as IFFT(values * FFT(f)).
  GridField apply(const GridField& field) const;
};

/// L^p norm, p >= 1. Grid: (h^d sum |f_i|^p)^{1/p}. Radial: full-space
/// norm with the surface factor applied in log space.
double lp_norm(const GridField& field, double p);
double lp_norm(const RadialProfile& profile, double p);

/// int |f|^2 log(|f|^2 / ||f||_2^2) with 0 log 0 := 0.
/// Throws if ||f||_2 = 0.
double entropy(const GridField& field);
double entropy(const RadialProfile& profile);

/// q-entropy int |f|^q log(|f|^q / ||f||_q^q), q > 1, same conventions.
double entropy_q(const GridField& field, double q);
double entropy_q(const RadialProfile& profile, double q);

/// ||(-Delta)^{s/2} f||_2^2 via the discrete Fourier sum
/// sum_k (2 pi |xi_k|)^{2s} |fhat_k|^2 (1/2L)^d with the continuous
/// normalization fhat(xi) = h^d sum_j e^{-2 pi i x_j xi} f_j.
double frac_half_norm_sq(const GridField& field, double s);

/// int |f'(r)|^p over R^n (the p-th power of the radial gradient norm);
/// requires derivative values.
double gradient_norm_pow(const RadialProfile& profile, double p);

/// Continuous-convention Fourier coefficients fhat(xi_k), including the
/// (-1)^{sum k} phase from the [-L, L) offset, in GridField layout.
std::vector<std::complex<double>> spectrum(const GridField& field);

}  // namespace fraclog
