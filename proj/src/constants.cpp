#include "fraclog/constants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fraclog/specialfn.hpp"

namespace fraclog {
namespace {

void check_lsi_order(int n, double s) {
  if (n < 1) throw std::domain_error("dimension n must be >= 1");
  if (!std::isfinite(s) || s <= 0.0) {
    std::ostringstream msg;
    msg << "order s = " << s << " violates s > 0";
    throw std::domain_error(msg.str());
  }
  if (s >= 0.5 * n) {
    std::ostringstream msg;
    msg << "order s = " << s << " violates s < n/2 = " << 0.5 * n;
    throw std::domain_error(msg.str());
  }
}

void check_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    std::ostringstream msg;
    msg << name << " = " << v << " violates " << name << " > 0";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

void LsiParams::validate() const {
  check_lsi_order(n, s);
  check_positive(a, "a");
}

double sobolev_constant(int n, double s) {
  check_lsi_order(n, s);
  const double nd = static_cast<double>(n);
  const double log_c = log_gamma(0.5 * (nd - 2.0 * s)) -
                       2.0 * s * std::log(2.0) - s * std::log(M_PI) -
                       log_gamma(0.5 * (nd + 2.0 * s)) +
                       (2.0 * s / nd) * gamma_ratio_log(nd, 0.5 * nd);
  return std::exp(log_c);
}

double lsi_rhs_constant(const LsiParams& params) {
  params.validate();
  const double nd = static_cast<double>(params.n);
  return nd * M_E * params.a * params.a / (2.0 * params.s) *
         sobolev_constant(params.n, params.s);
}

double lieb_loss_rhs_constant(double a) {
  check_positive(a, "a");
  return a * a / M_PI;
}

double asymptotic_constant(int n, double s) {
  check_lsi_order(n, s);
  const double nd = static_cast<double>(n);
  const double log_c = (s - s / nd) * std::log(2.0) - s * std::log(M_PI) - s -
                       s * std::log(nd);
  return std::exp(log_c);
}

double asymptotic_ratio(int n, double s) {
  return sobolev_constant(n, s) / asymptotic_constant(n, s);
}

GnsParams gns_exponents(int n, double p, double q) {
  if (n < 2) throw std::domain_error("dimension n must be >= 2 for 1 < p < n");
  const double nd = static_cast<double>(n);
  if (!std::isfinite(p) || p <= 1.0 || p >= nd) {
    std::ostringstream msg;
    msg << "p = " << p << " violates 1 < p < n = " << n;
    throw std::domain_error(msg.str());
  }
  const double q_max = p * (nd - 1.0) / (nd - p);
  if (!std::isfinite(q) || q <= p || q > q_max) {
    std::ostringstream msg;
    msg << "q = " << q << " violates p < q <= p(n-1)/(n-p) = " << q_max;
    throw std::domain_error(msg.str());
  }
  GnsParams out;
  out.n = n;
  out.p = p;
  out.q = q;
  out.r = p * (q - 1.0) / (p - 1.0);
  out.delta = nd * p - q * (nd - p);
  if (out.delta <= 0.0) {
    std::ostringstream msg;
    msg << "delta = np - q(n-p) = " << out.delta << " violates delta > 0";
    throw std::domain_error(msg.str());
  }
  out.theta = (q - p) * nd / ((q - 1.0) * out.delta);
  return out;
}

double gns_constant(int n, double p, double q) {
  const GnsParams g = gns_exponents(n, p, q);
  const double nd = static_cast<double>(n);
  const double log_gamma_block =
      log_gamma(q * (p - 1.0) / (q - p)) + log_gamma(0.5 * nd + 1.0) -
      log_gamma((p - 1.0) / p * g.delta / (q - p)) -
      log_gamma(nd * (p - 1.0) / p + 1.0);
  const double log_s =
      g.theta * std::log((q - p) / (p * std::sqrt(M_PI))) +
      g.theta / p * std::log(p * q / (nd * (q - p))) +
      1.0 / g.r * std::log(g.delta / (p * q)) + g.theta / nd * log_gamma_block;
  return std::exp(log_s);
}

double optimal_a_theorem1(double l2sq, double fracsq, int n, double s) {
  check_positive(l2sq, "l2sq");
  check_positive(fracsq, "fracsq");
  return std::sqrt(l2sq / (M_E * sobolev_constant(n, s) * fracsq));
}

double optimal_a_lieb_loss(double l2sq, double gradsq, int n) {
  if (n < 1) throw std::domain_error("dimension n must be >= 1");
  check_positive(l2sq, "l2sq");
  check_positive(gradsq, "gradsq");
  return std::sqrt(static_cast<double>(n) * M_PI * l2sq / (2.0 * gradsq));
}

}  // namespace fraclog
