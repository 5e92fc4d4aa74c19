#include "fraclog/grid_field.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "fraclog/fft.hpp"

namespace fraclog {
namespace {

void check_shape(int dim, double half_width, std::size_t n) {
  if (dim < 1 || dim > 3)
    throw std::domain_error("GridField: dimension must be 1, 2 or 3");
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::domain_error("GridField: half width must be positive");
  if (n < 16 || !detail::is_pow2(n))
    throw std::domain_error("GridField: points per axis must be a power of two >= 16");
}

template <typename T>
void write_le(std::ofstream& out, T value) {
  static_assert(sizeof(T) == 8);
  std::array<unsigned char, 8> bytes;
  std::memcpy(bytes.data(), &value, 8);
  if constexpr (std::endian::native == std::endian::big)
    std::reverse(bytes.begin(), bytes.end());
  out.write(reinterpret_cast<const char*>(bytes.data()), 8);
}

template <typename T>
T read_le(std::ifstream& in) {
  static_assert(sizeof(T) == 8);
  std::array<unsigned char, 8> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), 8);
  if constexpr (std::endian::native == std::endian::big)
    std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), 8);
  return value;
}

}  // namespace

GridField::GridField(int dim, double half_width, std::size_t points_per_axis,
                     std::vector<std::complex<double>> samples)
    : dim_(dim), half_width_(half_width), n_(points_per_axis),
      samples_(std::move(samples)) {
  check_shape(dim_, half_width_, n_);
  std::size_t expected = 1;
  for (int d = 0; d < dim_; ++d) expected *= n_;
  if (samples_.size() != expected)
    throw std::invalid_argument("GridField: sample count does not match N^d");

  double total = 0.0, shell = 0.0;
  for (std::size_t idx = 0; idx < samples_.size(); ++idx) {
    const std::complex<double> v = samples_[idx];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("GridField: non-finite sample");
    const double m = std::norm(v);
    total += m;
    std::size_t rest = idx;
    bool on_shell = false;
    for (int d = dim_ - 1; d >= 0; --d) {
      const std::size_t i = rest % n_;
      rest /= n_;
      if (i == 0 || i == n_ - 1) on_shell = true;
    }
    if (on_shell) shell += m;
  }
  boundary_fraction_ = total > 0.0 ? shell / total : 0.0;
  truncation_flag_ = boundary_fraction_ > kBoundaryMassThreshold;
}

GridField GridField::build(int dim, double half_width, std::size_t points_per_axis,
                           const SampleFn& f) {
  check_shape(dim, half_width, points_per_axis);
  const std::size_t n = points_per_axis;
  std::size_t total = 1;
  for (int d = 0; d < dim; ++d) total *= n;
  const double h = 2.0 * half_width / static_cast<double>(n);

  std::vector<std::complex<double>> samples(total);
  std::array<double, 3> x{};
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int d = dim - 1; d >= 0; --d) {
      x[d] = -half_width + h * static_cast<double>(rest % n);
      rest /= n;
    }
    samples[idx] = f(std::span<const double>(x.data(), static_cast<std::size_t>(dim)));
  }
  return GridField(dim, half_width, n, std::move(samples));
}

void GridField::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("GridField::save: cannot open " + path.string());
  write_le<std::int64_t>(out, dim_);
  write_le<std::int64_t>(out, static_cast<std::int64_t>(n_));
  write_le<double>(out, half_width_);
  for (const auto& v : samples_) {
    write_le<double>(out, v.real());
    write_le<double>(out, v.imag());
  }
  if (!out) throw std::runtime_error("GridField::save: write failed");
}

GridField GridField::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("GridField::load: cannot open " + path.string());
  const auto dim = read_le<std::int64_t>(in);
  const auto n = read_le<std::int64_t>(in);
  const auto half_width = read_le<double>(in);
  if (!in || dim < 1 || dim > 3 || n < 16)
    throw std::runtime_error("GridField::load: bad header");
  std::size_t total = 1;
  for (std::int64_t d = 0; d < dim; ++d) total *= static_cast<std::size_t>(n);
  std::vector<std::complex<double>> samples(total);
  for (auto& v : samples) {
    const double re = read_le<double>(in);
    const double im = read_le<double>(in);
    v = {re, im};
  }
  if (!in) throw std::runtime_error("GridField::load: truncated payload");
  return GridField(static_cast<int>(dim), half_width, static_cast<std::size_t>(n),
                   std::move(samples));
}

}  // namespace fraclog
