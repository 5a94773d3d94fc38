#include "fracwave/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "fracwave/errors.hpp"

namespace fracwave {

bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) {
    throw SizeError("FFT length must be a power of two, got " + std::to_string(n));
  }
  const int bits = std::countr_zero(n);
  bit_reverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rev = 0;
    for (int b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) rev |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = rev;
  }
  twiddles_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = {std::cos(angle), std::sin(angle)};
  }
}

void FftPlan::forward(std::span<Complex> data) const { transform(data, false); }

void FftPlan::inverse(std::span<Complex> data) const {
  transform(data, true);
  const double scale = 1.0 / static_cast<double>(n_);
  for (Complex& v : data) v *= scale;
}

void FftPlan::transform(std::span<Complex> data, bool inverse) const {
  if (data.size() != n_) {
    throw SizeError("FFT plan of length " + std::to_string(n_) + " applied to " +
                    std::to_string(data.size()) + " samples");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * stride];
        if (inverse) w = std::conj(w);
        const Complex t = w * data[start + k + half];
        const Complex u = data[start + k];
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

std::vector<Complex> fft_forward(std::span<const Complex> samples) {
  FftPlan plan(samples.size());
  std::vector<Complex> out(samples.begin(), samples.end());
  plan.forward(out);
  return out;
}

std::vector<Complex> fft_inverse(std::span<const Complex> modes) {
  FftPlan plan(modes.size());
  std::vector<Complex> out(modes.begin(), modes.end());
  plan.inverse(out);
  return out;
}

}  // namespace fracwave
