#include "fracwave/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace fracwave {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series for Gamma(z + 1), z >= -1/2.
double lanczos_sum(double z) {
  double s = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    s += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  return s;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x == std::floor(x)) return 0.0;
  // reduce to (-1, 1]
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r <= -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < 0.5) return std::numbers::pi / (sin_pi(x) * gamma(1.0 - x));
  if (x > 171.7) return std::numeric_limits<double>::infinity();

  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // split the power so t^(z+1/2) e^-t does not overflow before the product
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(double x) {
  if (is_nonpositive_integer(x)) return std::numeric_limits<double>::infinity();
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::abs(sin_pi(x))) - log_gamma(1.0 - x);
  }
  if (x < 10.0) return std::log(std::abs(gamma(x)));
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) {
    if (x > 171.0) return std::exp(-log_gamma(x));
    return 1.0 / gamma(x);
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  const double g = 1.0 - x;
  if (g > 171.0) {
    return sin_pi(x) * std::exp(log_gamma(g)) / std::numbers::pi;
  }
  return sin_pi(x) * gamma(g) / std::numbers::pi;
}

}  // namespace fracwave
