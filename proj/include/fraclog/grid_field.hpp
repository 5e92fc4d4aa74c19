#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

namespace fraclog {

/// A complex-valued function sampled on the uniform grid of [-L, L)^d,
/// d <= 3, N points per axis (N a power of two), row-major axis order.
/// The samples are treated as one period of a periodic extension by all
/// spectral operations. Immutable after construction.
class GridField {
 public:
  using SampleFn = std::function<std::complex<double>(std::span<const double>)>;

  GridField(int dim, double half_width, std::size_t points_per_axis,
            std::vector<std::complex<double>> samples);

  /// Samples f at x = -L + h*(i_1, ..., i_d) and checks the boundary-shell
  /// L^2 mass against the 1e-10 admissibility threshold; a violation sets
  /// the truncation flag rather than failing.
  static GridField build(int dim, double half_width, std::size_t points_per_axis,
                         const SampleFn& f);

  int dim() const { return dim_; }
  double half_width() const { return half_width_; }
  std::size_t points_per_axis() const { return n_; }
  double spacing() const { return 2.0 * half_width_ / static_cast<double>(n_); }
  std::size_t size() const { return samples_.size(); }
  std::span<const std::complex<double>> samples() const { return samples_; }

  /// Fraction of the L^2 mass carried by the outermost grid shell
  /// (any axis index in {0, N-1}); 0 for the zero field.
  double boundary_mass_fraction() const { return boundary_fraction_; }
  bool truncation_flagged() const { return truncation_flag_; }

  /// Flat binary container: int64 dim, int64 N, binary64 L (little endian),
  /// then N^d interleaved re/im binary64 samples.
  void save(const std::filesystem::path& path) const;
  static GridField load(const std::filesystem::path& path);

  static constexpr double kBoundaryMassThreshold = 1e-10;

 private:
  int dim_;
  double half_width_;
  std::size_t n_;
  std::vector<std::complex<double>> samples_;
  double boundary_fraction_ = 0.0;
  bool truncation_flag_ = false;
};

}  // namespace fraclog
