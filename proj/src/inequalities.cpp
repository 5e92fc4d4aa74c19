#include "fraclog/inequalities.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fraclog/constants.hpp"
#include "fraclog/functionals.hpp"

namespace fraclog {
namespace {

Discretization grid_disc(const GridField& field) {
  return {"grid", field.points_per_axis(), field.truncation_flagged()};
}

Discretization radial_disc(const RadialProfile& profile) {
  return {"radial", profile.node_count(), false};
}

void check_scale(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::domain_error("scale a must be positive");
}

double require_l2sq(double l2) {
  if (!(l2 > 0.0)) throw std::domain_error("field has zero L^2 norm");
  return l2 * l2;
}

}  // namespace

MarginReport lieb_loss_margin(const GridField& field, double a) {
  check_scale(a);
  const double n = field.dim();
  const double l2sq = require_l2sq(lp_norm(field, 2.0));
  MarginReport rep;
  rep.lhs = entropy(field) + n * (1.0 + std::log(a)) * l2sq;
  rep.rhs = lieb_loss_rhs_constant(a) * frac_half_norm_sq(field, 1.0);
  rep.disc = grid_disc(field);
  return rep;
}

MarginReport lieb_loss_margin(const RadialProfile& profile, double a) {
  check_scale(a);
  const double n = profile.ambient_dim();
  const double l2sq = require_l2sq(lp_norm(profile, 2.0));
  MarginReport rep;
  rep.lhs = entropy(profile) + n * (1.0 + std::log(a)) * l2sq;
  rep.rhs = lieb_loss_rhs_constant(a) * gradient_norm_pow(profile, 2.0);
  rep.disc = radial_disc(profile);
  return rep;
}

MarginReport theorem1_margin(const GridField& field, double s, double a) {
  const LsiParams params{field.dim(), s, a};
  params.validate();
  const double n = field.dim();
  const double l2sq = require_l2sq(lp_norm(field, 2.0));
  MarginReport rep;
  rep.lhs = entropy(field) + n / s * (1.0 + std::log(a)) * l2sq;
  rep.rhs = lsi_rhs_constant(params) * frac_half_norm_sq(field, s);
  rep.disc = grid_disc(field);
  return rep;
}

MarginReport sobolev_margin(const GridField& field, double s) {
  const int n = field.dim();
  if (!(s > 0.0) || s >= 0.5 * n) {
    std::ostringstream msg;
    msg << "order s = " << s << " violates 0 < s < n/2 = " << 0.5 * n;
    throw std::domain_error(msg.str());
  }
  const double q = 2.0 * n / (n - 2.0 * s);
  MarginReport rep;
  const double lq = lp_norm(field, q);
  rep.lhs = lq * lq;
  rep.rhs = sobolev_constant(n, s) * frac_half_norm_sq(field, s);
  rep.disc = grid_disc(field);
  return rep;
}

MarginReport sobolev_margin_radial_s1(const RadialProfile& profile) {
  const int n = profile.ambient_dim();
  if (n <= 2)
    throw std::domain_error("sobolev_margin_radial_s1: dimension n must be >= 3");
  const double q = 2.0 * n / (n - 2.0);
  MarginReport rep;
  const double lq = lp_norm(profile, q);
  rep.lhs = lq * lq;
  rep.rhs = sobolev_constant(n, 1.0) * gradient_norm_pow(profile, 2.0);
  rep.disc = radial_disc(profile);
  return rep;
}

MarginReport gns_margin(const RadialProfile& profile, double p, double q) {
  const GnsParams g = gns_exponents(profile.ambient_dim(), p, q);
  MarginReport rep;
  rep.lhs = lp_norm(profile, g.r);
  rep.rhs = gns_constant(g.n, p, q) *
            std::pow(gradient_norm_pow(profile, p), g.theta / p) *
            std::pow(lp_norm(profile, q), 1.0 - g.theta);
  rep.disc = radial_disc(profile);
  return rep;
}

MarginReport theorem2_margin(const RadialProfile& profile, double p, double q,
                             double a) {
  const GnsParams g = gns_exponents(profile.ambient_dim(), p, q);
  check_scale(a);
  const double lq = lp_norm(profile, q);
  if (!(lq > 0.0)) throw std::domain_error("field has zero L^q norm");
  const double prefactor = p * (q - 1.0) / (q - p);
  MarginReport rep;
  rep.lhs = entropy_q(profile, q) +
            (1.0 + std::log(a)) * prefactor * std::pow(lq, q);
  rep.rhs = a * prefactor * gns_constant(g.n, p, q) *
            std::pow(gradient_norm_pow(profile, p), g.theta / p) *
            std::pow(lq, 1.0 - g.theta);
  rep.disc = radial_disc(profile);
  return rep;
}

namespace {

template <typename Field>
MarginReport interpolation_check_impl(const Field& field, double q, double eps,
                                      Discretization disc) {
  if (!(q > 1.0)) throw std::domain_error("entropy_interpolation_check: q must be > 1");
  if (!(eps > 0.0)) throw std::domain_error("entropy_interpolation_check: eps must be > 0");
  const double lq = lp_norm(field, q);
  if (!(lq > 0.0)) throw std::domain_error("field has zero L^q norm");
  const double lq_pow = std::pow(lq, q);
  const double higher = lp_norm(field, q * eps + q);
  MarginReport rep;
  rep.lhs = entropy_q(field, q);
  rep.rhs = (eps + 1.0) / eps * lq_pow *
            (q * std::log(higher) - q * std::log(lq));
  rep.disc = std::move(disc);
  return rep;
}

}  // namespace

MarginReport entropy_interpolation_check(const GridField& field, double q,
                                         double eps) {
  return interpolation_check_impl(field, q, eps, grid_disc(field));
}

MarginReport entropy_interpolation_check(const RadialProfile& profile, double q,
                                         double eps) {
  return interpolation_check_impl(profile, q, eps, radial_disc(profile));
}

MarginReport log_linear_bound_check(double x, double b) {
  if (!(x > 0.0) || !(b > 0.0) || !std::isfinite(x) || !std::isfinite(b))
    throw std::domain_error("log_linear_bound_check: x and b must be positive");
  MarginReport rep;
  rep.lhs = std::log(x);
  rep.rhs = b * x - std::log(b) - 1.0;
  rep.disc = {"exact", 0, false};
  return rep;
}

}  // namespace fraclog
