#pragma once

#include <cstdint>

#include "fraclog/grid_field.hpp"
#include "fraclog/radial_profile.hpp"

namespace fraclog {

/// Closed-form functionals of the Gaussian exp(-pi |x|^2 / (2a^2)) in R^n.
/// With the scale of the classical log-Sobolev inequality matched to a, both
/// sides equal n a^n / 2 exactly.
struct GaussianOracle {
  int n;
  double a;

  double l2sq() const;    // a^n
  double gradsq() const;  // n pi a^{n-2} / 2
  double ent() const;     // -a^n (n/2 + n log a)
};

struct GaussianField {
  GridField field;
  GaussianOracle oracle;
};

struct GaussianProfile {
  RadialProfile profile;
  GaussianOracle oracle;
};

/// Sampled Gaussian exp(-pi |x|^2 / (2a^2)) on the grid (n = dim <= 3) or as
/// a radial profile (any n >= 1), with its analytic oracle.
GaussianField gaussian_grid(int n, double a, double half_width,
                            std::size_t points_per_axis);
GaussianProfile gaussian_radial(int n, double a, std::size_t node_count);

/// Sobolev extremizer (c^2 + |x - center|^2)^{-(n-2s)/2}, c != 0.
/// The radial version is centered at the origin and carries the analytic
/// derivative.
GridField aubin_talenti_grid(int n, double s, double c, double half_width,
                             std::size_t points_per_axis,
                             const double* center = nullptr);
RadialProfile aubin_talenti_radial(int n, double s, double c,
                                   std::size_t node_count);

/// Gagliardo-Nirenberg extremizer (1 + c r^{p/(p-1)})^{-(p-1)/(q-p)}, c > 0,
/// with analytic derivative. Checks that the r-, q- and gradient-p-norms are
/// integrable before building.
RadialProfile gns_extremal(int n, double p, double q, double c,
                           std::size_t node_count);

/// Deterministic pseudo-random mixture of `count` Gaussians: centers in
/// [-L/4, L/4]^d, widths in [L/32, L/8], complex amplitudes in the unit
/// disk. The stream is a fixed function of the seed (std::mt19937_64 with
/// 53-bit uniform draws in the documented order), so identical arguments
/// give bit-identical fields on every platform.
GridField random_mixture(std::uint64_t seed, int dim, int count,
                         double half_width, std::size_t points_per_axis);

/// Deterministic positive radial mixture of `count` Gaussian bumps with
/// amplitudes in [0.05, 0.25] and widths in [0.6, 1.2]; smooth, decaying,
/// with analytic derivative. Same PRNG contract as random_mixture.
RadialProfile random_radial_mixture(std::uint64_t seed, int ambient_dim,
                                    int count, std::size_t node_count);

}  // namespace fraclog
