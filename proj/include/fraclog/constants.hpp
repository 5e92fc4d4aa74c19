#pragma once

namespace fraclog {

/// Parameters of the fractional logarithmic Sobolev inequality: dimension n,
/// derivative order s with 0 < s < n/2, and free scale a > 0.
struct LsiParams {
  int n;
  double s;
  double a;

  /// Throws std::domain_error naming the violated hypothesis.
  void validate() const;
};

/// Parameters of the L^q / W^{1,p} entropy inequality together with the
/// derived exponents. Construct through gns_exponents(), which validates the
/// hypotheses 1 < p < n, p < q <= p(n-1)/(n-p) and fills r, theta, delta.
struct GnsParams {
  int n;
  double p;
  double q;
  double r;      // p(q-1)/(p-1)
  double theta;  // (q-p) n / ((q-1)(np - (n-p)q)), in (0, 1]
  double delta;  // np - q(n-p), positive on the admissible domain
};

/// Sharp constant C(n,s) of the fractional Sobolev inequality
/// ||u||_{L^{2n/(n-2s)}}^2 <= C(n,s) ||(-Delta)^{s/2} u||_2^2.
/// All gamma factors are combined in log space, so the value stays finite
/// for n up to 1e6 and beyond.
double sobolev_constant(int n, double s);

/// Right-hand-side factor (n e a^2 / 2s) C(n,s) of the fractional
/// log-Sobolev inequality.
double lsi_rhs_constant(const LsiParams& params);

/// Right-hand-side factor a^2/pi of the classical (s=1, sharp) form.
double lieb_loss_rhs_constant(double a);

/// Large-n approximant 2^{s-s/n} pi^{-s} e^{-s} n^{-s} of C(n,s).
double asymptotic_constant(int n, double s);

/// sobolev_constant / asymptotic_constant; approaches 1 as n grows at
/// fixed s.
double asymptotic_ratio(int n, double s);

/// Validates (n, p, q) and returns the derived exponent set.
GnsParams gns_exponents(int n, double p, double q);

/// Sharp Gagliardo-Nirenberg constant S(n,p,q) in
/// ||f||_r <= S(n,p,q) ||grad f||_p^theta ||f||_q^{1-theta}.
double gns_constant(int n, double p, double q);

/// Closed-form minimizer over a of the fractional log-Sobolev margin at a
/// fixed function: a* = sqrt(l2sq / (e C(n,s) fracsq)).
double optimal_a_theorem1(double l2sq, double fracsq, int n, double s);

/// Closed-form minimizer over a of the classical log-Sobolev margin:
/// a* = sqrt(n pi l2sq / (2 gradsq)).
double optimal_a_lieb_loss(double l2sq, double gradsq, int n);

}  // namespace fraclog
