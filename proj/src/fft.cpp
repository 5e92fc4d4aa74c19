#include "fraclog/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fraclog::detail {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::complex<double>* a, std::size_t n, int sign) {
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: length not a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      const double ang = sign * 2.0 * M_PI * static_cast<double>(k) /
                         static_cast<double>(len);
      twiddle[k] = {std::cos(ang), std::sin(ang)};
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + half] * twiddle[k];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

void fft_nd(std::vector<std::complex<double>>& data, int dim, std::size_t n,
            bool inverse) {
  const int sign = inverse ? +1 : -1;
  std::size_t total = 1;
  for (int d = 0; d < dim; ++d) total *= n;
  if (data.size() != total) throw std::invalid_argument("fft_nd: size mismatch");

  std::vector<std::complex<double>> line(n);
  // Row-major layout: axis `ax` has stride n^{dim-1-ax}.
  std::size_t stride = total;
  for (int ax = 0; ax < dim; ++ax) {
    stride /= n;
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        std::complex<double>* start = data.data() + base + off;
        for (std::size_t k = 0; k < n; ++k) line[k] = start[k * stride];
        fft_pow2(line.data(), n, sign);
        for (std::size_t k = 0; k < n; ++k) start[k * stride] = line[k];
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(total);
    for (auto& v : data) v *= scale;
  }
}

}  // namespace fraclog::detail
