#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fraclog::detail {

/// In-place radix-2 transform of a power-of-two-length sequence.
/// sign = -1 gives the forward kernel sum_j a_j e^{-2 pi i jk/N};
/// sign = +1 the unnormalized inverse (caller divides by N).
void fft_pow2(std::complex<double>* data, std::size_t n, int sign);

/// Separable transform of a d-dimensional row-major array with n points per
/// axis. inverse=true applies the normalized inverse (division by n^d).
void fft_nd(std::vector<std::complex<double>>& data, int dim, std::size_t n,
            bool inverse);

bool is_pow2(std::size_t n);

}  // namespace fraclog::detail
