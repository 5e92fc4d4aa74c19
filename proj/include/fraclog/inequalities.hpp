#pragma once

#include "fraclog/grid_field.hpp"
#include "fraclog/margin_report.hpp"
#include "fraclog/radial_profile.hpp"

namespace fraclog {

/// Classical log-Sobolev margin at scale a:
///   lhs = Ent(f) + n(1 + log a) ||f||_2^2,  rhs = (a^2/pi) ||grad f||_2^2.
/// The grid version realizes ||grad f||_2^2 spectrally as the s=1 norm.
MarginReport lieb_loss_margin(const GridField& field, double a);
MarginReport lieb_loss_margin(const RadialProfile& profile, double a);

/// Fractional log-Sobolev margin, 0 < s < d/2 with d the field dimension:
///   lhs = Ent(f) + (n/s)(1 + log a) ||f||_2^2,
///   rhs = (n e a^2 / 2s) C(n,s) ||(-Delta)^{s/2} f||_2^2.
MarginReport theorem1_margin(const GridField& field, double s, double a);

/// Fractional Sobolev margin with q = 2d/(d-2s):
///   lhs = ||f||_q^2,  rhs = C(d,s) ||(-Delta)^{s/2} f||_2^2.
MarginReport sobolev_margin(const GridField& field, double s);

/// s=1 Sobolev margin on a radial profile in dimension n >= 3, any n.
MarginReport sobolev_margin_radial_s1(const RadialProfile& profile);

/// Gagliardo-Nirenberg margin, r = p(q-1)/(p-1):
///   lhs = ||f||_r,  rhs = S(n,p,q) ||grad f||_p^theta ||f||_q^{1-theta}.
MarginReport gns_margin(const RadialProfile& profile, double p, double q);

/// L^q / W^{1,p} entropy-inequality margin at scale a:
///   lhs = Ent_q(f) + (1 + log a) K ||f||_q^q,
///   rhs = a K S(n,p,q) ||grad f||_p^theta ||f||_q^{1-theta},
/// with K = p(q-1)/(q-p).
MarginReport theorem2_margin(const RadialProfile& profile, double p, double q,
                             double a);

/// Jensen interpolation step:
///   Ent_q(f) <= ((eps+1)/eps) ||f||_q^q log(||f||_{q eps+q}^q / ||f||_q^q).
MarginReport entropy_interpolation_check(const GridField& field, double q,
                                         double eps);
MarginReport entropy_interpolation_check(const RadialProfile& profile, double q,
                                         double eps);

/// Elementary tangent-line bound log x <= b x - log b - 1 for x, b > 0;
/// equality exactly at x = 1/b.
MarginReport log_linear_bound_check(double x, double b);

}  // namespace fraclog
