#include "fraclog/extremals.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fraclog/constants.hpp"

namespace fraclog {
namespace {

void check_scale_a(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::domain_error("gaussian: scale a must be positive");
}

void check_at_params(int n, double s, double c) {
  if (n < 1) throw std::domain_error("aubin_talenti: dimension must be >= 1");
  if (!(s > 0.0) || !(s < 0.5 * n))
    throw std::domain_error("aubin_talenti: order s must satisfy 0 < s < n/2");
  if (c == 0.0 || !std::isfinite(c))
    throw std::domain_error("aubin_talenti: c must be a nonzero real");
}

// 53-bit uniform in [0, 1); the fixed draw order below defines the stream.
double next_unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

double GaussianOracle::l2sq() const { return std::pow(a, n); }

double GaussianOracle::gradsq() const {
  return 0.5 * n * M_PI * std::pow(a, n - 2);
}

double GaussianOracle::ent() const {
  return -std::pow(a, n) * (0.5 * n + n * std::log(a));
}

GaussianField gaussian_grid(int n, double a, double half_width,
                            std::size_t points_per_axis) {
  check_scale_a(a);
  const double k = M_PI / (2.0 * a * a);
  auto field = GridField::build(
      n, half_width, points_per_axis, [k](std::span<const double> x) {
        double rsq = 0.0;
        for (double c : x) rsq += c * c;
        return std::complex<double>(std::exp(-k * rsq), 0.0);
      });
  return {std::move(field), GaussianOracle{n, a}};
}

GaussianProfile gaussian_radial(int n, double a, std::size_t node_count) {
  check_scale_a(a);
  const double k = M_PI / (2.0 * a * a);
  const std::function<double(double)> f = [k](double r) {
    return std::exp(-k * r * r);
  };
  const std::function<double(double)> df = [k](double r) {
    return -2.0 * k * r * std::exp(-k * r * r);
  };
  return {build_radial(f, &df, n, node_count), GaussianOracle{n, a}};
}

GridField aubin_talenti_grid(int n, double s, double c, double half_width,
                             std::size_t points_per_axis, const double* center) {
  check_at_params(n, s, c);
  if (n > 3) throw std::domain_error("aubin_talenti: grid path requires n <= 3");
  const double expo = -0.5 * (n - 2.0 * s);
  std::array<double, 3> d{0.0, 0.0, 0.0};
  if (center)
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = center[i];
  return GridField::build(
      n, half_width, points_per_axis, [=](std::span<const double> x) {
        double rsq = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
          rsq += (x[i] - d[i]) * (x[i] - d[i]);
        return std::complex<double>(std::pow(c * c + rsq, expo), 0.0);
      });
}

RadialProfile aubin_talenti_radial(int n, double s, double c,
                                   std::size_t node_count) {
  check_at_params(n, s, c);
  const double expo = -0.5 * (n - 2.0 * s);
  const double csq = c * c;
  const std::function<double(double)> f = [=](double r) {
    return std::pow(csq + r * r, expo);
  };
  const std::function<double(double)> df = [=](double r) {
    return 2.0 * expo * r * std::pow(csq + r * r, expo - 1.0);
  };
  return build_radial(f, &df, n, node_count);
}

RadialProfile gns_extremal(int n, double p, double q, double c,
                           std::size_t node_count) {
  (void)gns_exponents(n, p, q);  // validates the (n, p, q) hypotheses
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::domain_error("gns_extremal: c must be positive");
  // Tail decay r^{-p/(q-p)}: every needed norm integrates iff pq/(q-p) > n,
  // which the hypothesis delta = np - q(n-p) > 0 guarantees; kept explicit so
  // a failure is reported as such.
  if (!(p * q / (q - p) > static_cast<double>(n))) {
    std::ostringstream msg;
    msg << "gns_extremal: tail exponent pq/(q-p) = " << p * q / (q - p)
        << " is not integrable against r^{n-1} in dimension " << n;
    throw std::domain_error(msg.str());
  }
  const double kappa = p / (p - 1.0);
  const double expo = -(p - 1.0) / (q - p);
  const std::function<double(double)> f = [=](double r) {
    return std::pow(1.0 + c * std::pow(r, kappa), expo);
  };
  const std::function<double(double)> df = [=](double r) {
    return expo * std::pow(1.0 + c * std::pow(r, kappa), expo - 1.0) * c *
           kappa * std::pow(r, kappa - 1.0);
  };
  return build_radial(f, &df, n, node_count);
}

GridField random_mixture(std::uint64_t seed, int dim, int count,
                         double half_width, std::size_t points_per_axis) {
  if (dim < 1 || dim > 3)
    throw std::domain_error("random_mixture: dimension must be 1, 2 or 3");
  if (count < 1) throw std::domain_error("random_mixture: count must be >= 1");

  struct Component {
    std::array<double, 3> center;
    double inv_two_sigma_sq;
    std::complex<double> amplitude;
  };
  std::mt19937_64 eng(seed);
  std::vector<Component> comps(static_cast<std::size_t>(count));
  for (auto& comp : comps) {
    // Draw order per component: d center coordinates, width, amplitude
    // modulus^2, amplitude phase.
    comp.center = {0.0, 0.0, 0.0};
    for (int d = 0; d < dim; ++d)
      comp.center[static_cast<std::size_t>(d)] =
          (next_unit(eng) - 0.5) * half_width * 0.5;
    const double sigma =
        half_width / 32.0 + next_unit(eng) * (half_width / 8.0 - half_width / 32.0);
    comp.inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
    const double rho = std::sqrt(next_unit(eng));
    const double phase = 2.0 * M_PI * next_unit(eng);
    comp.amplitude = std::polar(rho, phase);
  }

  return GridField::build(
      dim, half_width, points_per_axis, [&](std::span<const double> x) {
        std::complex<double> sum = 0.0;
        for (const auto& comp : comps) {
          double dsq = 0.0;
          for (std::size_t i = 0; i < x.size(); ++i) {
            const double dx = x[i] - comp.center[i];
            dsq += dx * dx;
          }
          sum += comp.amplitude * std::exp(-dsq * comp.inv_two_sigma_sq);
        }
        return sum;
      });
}

RadialProfile random_radial_mixture(std::uint64_t seed, int ambient_dim,
                                    int count, std::size_t node_count) {
  if (ambient_dim < 1)
    throw std::domain_error("random_radial_mixture: dimension must be >= 1");
  if (count < 1) throw std::domain_error("random_radial_mixture: count must be >= 1");

  struct Bump {
    double amplitude;
    double inv_two_sigma_sq;
  };
  std::mt19937_64 eng(seed);
  std::vector<Bump> bumps(static_cast<std::size_t>(count));
  for (auto& b : bumps) {
    // Draw order per bump: amplitude, width.
    b.amplitude = 0.05 + next_unit(eng) * 0.20;
    const double sigma = 0.6 + next_unit(eng) * 0.6;
    b.inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
  }
  const std::function<double(double)> f = [bumps](double r) {
    double sum = 0.0;
    for (const auto& b : bumps)
      sum += b.amplitude * std::exp(-r * r * b.inv_two_sigma_sq);
    return sum;
  };
  const std::function<double(double)> df = [bumps](double r) {
    double sum = 0.0;
    for (const auto& b : bumps)
      sum += -2.0 * r * b.inv_two_sigma_sq * b.amplitude *
             std::exp(-r * r * b.inv_two_sigma_sq);
    return sum;
  };
  return build_radial(f, &df, ambient_dim, node_count);
}

}  // namespace fraclog
