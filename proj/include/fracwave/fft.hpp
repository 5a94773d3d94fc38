#pragma once

#include <span>
#include <vector>

#include "fracwave/types.hpp"

namespace fracwave {

/// Iterative radix-2 decimation-in-time FFT with precomputed twiddles.
///
/// Forward transform is unnormalised, X_j = sum_n x_n exp(-2 pi i j n / N);
/// the inverse carries the 1/N factor. A plan is immutable after
/// construction and may be shared between threads.
class FftPlan {
 public:
  /// Throws SizeError unless n is a power of two (n >= 1).
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::span<Complex> data) const;
  void inverse(std::span<Complex> data) const;

 private:
  void transform(std::span<Complex> data, bool inverse) const;

  std::size_t n_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<Complex> twiddles_;  // exp(-2 pi i k / N), k < N/2
};

bool is_power_of_two(std::size_t n);

std::vector<Complex> fft_forward(std::span<const Complex> samples);
std::vector<Complex> fft_inverse(std::span<const Complex> modes);

}  // namespace fracwave
