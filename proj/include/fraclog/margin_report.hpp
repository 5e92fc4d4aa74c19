#pragma once

#include <cmath>
#include <cstddef>
#include <string>

namespace fraclog {

/// Where and how finely an inequality instance was discretized.
struct Discretization {
  std::string kind;           // "grid" or "radial"
  std::size_t resolution = 0; // points per axis / node count
  bool truncation = false;    // boundary-mass admissibility check failed
};

/// Both sides of one inequality instance. margin() > 0 certifies the
/// inequality at this instance up to discretization tolerance.
struct MarginReport {
  double lhs = 0.0;
  double rhs = 0.0;
  Discretization disc;

  double margin() const { return rhs - lhs; }

  double relative_margin() const {
    const double den = rhs == 0.0 ? 1e-300 : std::abs(rhs);
    return margin() / den;
  }
};

/// Discretization tolerance policy: 1e-6 |rhs| for spectral grids meeting
/// the truncation check, 1e-4 |rhs| once the truncation flag is set
/// (slowly decaying tails), both stretched by `scale`.
double margin_tolerance(const MarginReport& report, double scale = 1.0);

}  // namespace fraclog
