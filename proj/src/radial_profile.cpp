#include "fraclog/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fraclog/specialfn.hpp"

namespace fraclog {
namespace {

constexpr double kHalfRange = 4.0;  // t in [-4, 4]
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

RadialProfile::RadialProfile(int ambient_dim, std::vector<double> nodes,
                             std::vector<double> values,
                             std::vector<double> log_weights,
                             std::optional<std::vector<double>> derivative_values)
    : n_(ambient_dim), nodes_(std::move(nodes)), values_(std::move(values)),
      log_weights_(std::move(log_weights)), derivative_(std::move(derivative_values)) {
  if (n_ < 1) throw std::domain_error("RadialProfile: ambient dimension must be >= 1");
  const std::size_t m = nodes_.size();
  if (m < 2 || values_.size() != m || log_weights_.size() != m ||
      (derivative_ && derivative_->size() != m))
    throw std::invalid_argument("RadialProfile: array length mismatch");
  double prev = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(nodes_[i] > prev))
      throw std::invalid_argument("RadialProfile: nodes must be strictly increasing and positive");
    prev = nodes_[i];
    if (!std::isfinite(values_[i]) || !std::isfinite(log_weights_[i]) ||
        (derivative_ && !std::isfinite((*derivative_)[i])))
      throw std::invalid_argument("RadialProfile: non-finite node data");
  }
  log_surface_ = sphere_surface_log(n_);
}

std::span<const double> RadialProfile::derivative_values() const {
  if (!derivative_)
    throw std::logic_error("RadialProfile: derivative values are not available");
  return *derivative_;
}

double RadialProfile::log_integral(std::span<const double> log_integrand) const {
  if (log_integrand.size() != nodes_.size())
    throw std::invalid_argument("log_integral: length mismatch");
  double peak = kNegInf;
  for (std::size_t i = 0; i < log_integrand.size(); ++i) {
    if (log_integrand[i] == kNegInf) continue;
    peak = std::max(peak, log_weights_[i] + log_integrand[i]);
  }
  if (peak == kNegInf) return kNegInf;
  double sum = 0.0;
  for (std::size_t i = 0; i < log_integrand.size(); ++i) {
    if (log_integrand[i] == kNegInf) continue;
    sum += std::exp(log_weights_[i] + log_integrand[i] - peak);
  }
  return log_surface_ + peak + std::log(sum);
}

double RadialProfile::integral_scaled(std::span<const double> log_magnitude,
                                      std::span<const double> factor) const {
  if (log_magnitude.size() != nodes_.size() || factor.size() != nodes_.size())
    throw std::invalid_argument("integral_scaled: length mismatch");
  double peak = kNegInf;
  for (std::size_t i = 0; i < log_magnitude.size(); ++i) {
    if (log_magnitude[i] == kNegInf) continue;
    peak = std::max(peak, log_weights_[i] + log_magnitude[i]);
  }
  if (peak == kNegInf) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < log_magnitude.size(); ++i) {
    if (log_magnitude[i] == kNegInf) continue;
    sum += std::exp(log_weights_[i] + log_magnitude[i] - peak) * factor[i];
  }
  return std::exp(log_surface_ + peak) * sum;
}

RadialProfile build_radial(const std::function<double(double)>& f,
                           const std::function<double(double)>* f_prime,
                           int ambient_dim, std::size_t node_count) {
  if (ambient_dim < 1)
    throw std::domain_error("build_radial: ambient dimension must be >= 1");
  if (node_count < 32)
    throw std::domain_error("build_radial: node count must be >= 32");

  const std::size_t m = node_count;
  const double h = 2.0 * kHalfRange / static_cast<double>(m - 1);
  std::vector<double> nodes(m), values(m), log_weights(m);
  std::optional<std::vector<double>> deriv;
  if (f_prime) deriv.emplace(m);

  for (std::size_t i = 0; i < m; ++i) {
    const double t = -kHalfRange + h * static_cast<double>(i);
    const double log_r = 0.5 * M_PI * std::sinh(t);
    const double r = std::exp(log_r);
    nodes[i] = r;
    // d/dt of r is (pi/2) cosh(t) r, so the rule weight times r^{n-1} is
    // h (pi/2) cosh(t) r^n; kept in log form to survive large n.
    log_weights[i] = std::log(h * 0.5 * M_PI * std::cosh(t)) +
                     static_cast<double>(ambient_dim) * log_r;
    values[i] = f(r);
    if (deriv) (*deriv)[i] = (*f_prime)(r);
  }
  return RadialProfile(ambient_dim, std::move(nodes), std::move(values),
                       std::move(log_weights), std::move(deriv));
}

}  // namespace fraclog
