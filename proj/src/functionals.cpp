#include "fraclog/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fraclog/fft.hpp"

namespace fraclog {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_p(double p) {
  if (!std::isfinite(p) || p < 1.0)
    throw std::domain_error("lp_norm: exponent p must be >= 1");
}

double cell_volume(const GridField& f) {
  double v = 1.0;
  for (int d = 0; d < f.dim(); ++d) v *= f.spacing();
  return v;
}

// Signed frequency component of flat axis index i.
inline double freq_component(std::size_t i, std::size_t n, double inv_2l) {
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  auto k = static_cast<std::ptrdiff_t>(i);
  if (k >= half) k -= static_cast<std::ptrdiff_t>(n);
  return static_cast<double>(k) * inv_2l;
}

// Calls fn(flat_index, |xi|^2) over the whole frequency lattice.
template <typename Fn>
void for_each_freq(int dim, double half_width, std::size_t n, Fn&& fn) {
  const double inv_2l = 1.0 / (2.0 * half_width);
  std::size_t total = 1;
  for (int d = 0; d < dim; ++d) total *= n;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    double xi_sq = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double c = freq_component(rest % n, n, inv_2l);
      xi_sq += c * c;
      rest /= n;
    }
    fn(idx, xi_sq);
  }
}

std::vector<std::complex<double>> forward_dft(const GridField& field) {
  std::vector<std::complex<double>> data(field.samples().begin(),
                                         field.samples().end());
  detail::fft_nd(data, field.dim(), field.points_per_axis(), false);
  return data;
}

}  // namespace

FreqMultiplier FreqMultiplier::make(int dim, double half_width,
                                    std::size_t points_per_axis, double order) {
  if (!(order > 0.0) || !std::isfinite(order))
    throw std::domain_error("FreqMultiplier: order s must be positive");
  if (dim < 1 || dim > 3)
    throw std::domain_error("FreqMultiplier: dimension must be 1, 2 or 3");
  FreqMultiplier m;
  m.order = order;
  m.dim = dim;
  m.half_width = half_width;
  m.points_per_axis = points_per_axis;
  std::size_t total = 1;
  for (int d = 0; d < dim; ++d) total *= points_per_axis;
  m.values.assign(total, 0.0);
  for_each_freq(dim, half_width, points_per_axis, [&](std::size_t idx, double xi_sq) {
    // Zero frequency stays exactly 0: continuum limit of (2 pi |xi|)^s.
    m.values[idx] = xi_sq == 0.0 ? 0.0
                                 : std::pow(2.0 * M_PI * std::sqrt(xi_sq), order);
  });
  return m;
}

GridField FreqMultiplier::apply(const GridField& field) const {
  if (field.dim() != dim || field.points_per_axis() != points_per_axis ||
      field.half_width() != half_width)
    throw std::invalid_argument("FreqMultiplier::apply: lattice mismatch");
  auto data = forward_dft(field);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= values[i];
  detail::fft_nd(data, dim, points_per_axis, true);
  return GridField(dim, half_width, points_per_axis, std::move(data));
}

double lp_norm(const GridField& field, double p) {
  check_p(p);
  double sum = 0.0;
  for (const auto& v : field.samples()) {
    const double a = std::abs(v);
    if (a > 0.0) sum += std::pow(a, p);
  }
  return std::pow(cell_volume(field) * sum, 1.0 / p);
}

double lp_norm(const RadialProfile& profile, double p) {
  check_p(p);
  std::vector<double> log_g(profile.node_count());
  const auto vals = profile.values();
  for (std::size_t i = 0; i < log_g.size(); ++i) {
    const double a = std::abs(vals[i]);
    log_g[i] = a > 0.0 ? p * std::log(a) : kNegInf;
  }
  const double log_int = profile.log_integral(log_g);
  return log_int == kNegInf ? 0.0 : std::exp(log_int / p);
}

double entropy(const GridField& field) { return entropy_q(field, 2.0); }

double entropy(const RadialProfile& profile) { return entropy_q(profile, 2.0); }

double entropy_q(const GridField& field, double q) {
  if (!(q > 1.0)) throw std::domain_error("entropy_q: q must be > 1");
  const double vol = cell_volume(field);
  double mass = 0.0;
  for (const auto& v : field.samples()) {
    const double a = std::abs(v);
    if (a > 0.0) mass += std::pow(a, q);
  }
  mass *= vol;
  if (!(mass > 0.0)) throw std::domain_error("entropy_q: field has zero L^q norm");
  const double log_mass = std::log(mass);
  double sum = 0.0;
  for (const auto& v : field.samples()) {
    const double a = std::abs(v);
    if (a == 0.0) continue;  // 0 log 0 := 0
    const double log_m = q * std::log(a);
    sum += std::exp(log_m) * (log_m - log_mass);
  }
  return vol * sum;
}

double entropy_q(const RadialProfile& profile, double q) {
  if (!(q > 1.0)) throw std::domain_error("entropy_q: q must be > 1");
  const auto vals = profile.values();
  std::vector<double> log_m(profile.node_count());
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    const double a = std::abs(vals[i]);
    log_m[i] = a > 0.0 ? q * std::log(a) : kNegInf;
  }
  const double log_mass = profile.log_integral(log_m);
  if (log_mass == kNegInf)
    throw std::domain_error("entropy_q: field has zero L^q norm");
  std::vector<double> factor(log_m.size());
  for (std::size_t i = 0; i < log_m.size(); ++i)
    factor[i] = log_m[i] == kNegInf ? 0.0 : log_m[i] - log_mass;
  return profile.integral_scaled(log_m, factor);
}

double frac_half_norm_sq(const GridField& field, double s) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::domain_error("frac_half_norm_sq: order s must be positive");
  const auto data = forward_dft(field);
  const std::size_t n = field.points_per_axis();
  double sum = 0.0;
  for_each_freq(field.dim(), field.half_width(), n, [&](std::size_t idx, double xi_sq) {
    if (xi_sq == 0.0) return;
    sum += std::pow(4.0 * M_PI * M_PI * xi_sq, s) * std::norm(data[idx]);
  });
  // fhat = h^d DFT and d xi = (1/2L)^d per cell: h^{2d} (2L)^{-d} = (2L)^d / N^{2d}.
  double scale = 1.0;
  for (int d = 0; d < field.dim(); ++d)
    scale *= 2.0 * field.half_width() /
             (static_cast<double>(n) * static_cast<double>(n));
  return sum * scale;
}

double gradient_norm_pow(const RadialProfile& profile, double p) {
  check_p(p);
  if (!profile.has_derivative())
    throw std::logic_error("gradient_norm_pow: profile carries no derivative values");
  const auto dv = profile.derivative_values();
  std::vector<double> log_g(profile.node_count());
  for (std::size_t i = 0; i < log_g.size(); ++i) {
    const double a = std::abs(dv[i]);
    log_g[i] = a > 0.0 ? p * std::log(a) : kNegInf;
  }
  const double log_int = profile.log_integral(log_g);
  return log_int == kNegInf ? 0.0 : std::exp(log_int);
}

std::vector<std::complex<double>> spectrum(const GridField& field) {
  auto data = forward_dft(field);
  const std::size_t n = field.points_per_axis();
  double scale = 1.0;
  for (int d = 0; d < field.dim(); ++d) scale *= field.spacing();
  for (std::size_t idx = 0; idx < data.size(); ++idx) {
    std::size_t rest = idx;
    int parity = 0;
    for (int d = 0; d < field.dim(); ++d) {
      parity += static_cast<int>(rest % n);
      rest /= n;
    }
    data[idx] *= (parity % 2 == 0) ? scale : -scale;
  }
  return data;
}

}  // namespace fraclog
