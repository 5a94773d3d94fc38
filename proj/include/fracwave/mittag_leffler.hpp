#pragma once

// One-parameter Mittag-Leffler function
//
//   E_alpha(z) = sum_{n >= 0} z^n / Gamma(alpha n + 1),   0 < alpha <= 1,
//
// which propagates a single Fourier mode of D_t^alpha u = i kappa u from t = 0:
// u(t) = E_alpha(i kappa t^alpha) u(0).
//
// Three evaluation regimes are available. The dispatcher tries them in the
// order series, asymptotic, contour and returns the first whose own error
// estimate meets `accuracy_goal`.

#include <string_view>

#include "fracwave/types.hpp"

namespace fracwave {

struct MLParams {
  double series_radius = 5.0;  // Taylor summation is attempted for |z| <= radius
  double series_tol = 1e-16;   // relative size of the last retained term
  int max_terms = 400;
  double accuracy_goal = 1e-12;  // regime acceptance threshold (relative)

  /// Throws InvalidParameter on out-of-range fields.
  void validate() const;
};

enum class MLRegime { exact, series, asymptotic, contour };

std::string_view to_string(MLRegime regime);

struct MLResult {
  Complex value;
  double error_estimate = 0.0;  // relative
  MLRegime regime = MLRegime::exact;
};

/// Evaluates E_alpha(z). Throws ConvergenceError when no regime reaches the
/// accuracy goal, or when the value overflows double precision.
MLResult mittag_leffler_eval(FractionalOrder alpha, Complex z, const MLParams& params = {});

inline Complex mittag_leffler(FractionalOrder alpha, Complex z, const MLParams& params = {}) {
  return mittag_leffler_eval(alpha, z, params).value;
}

// Individual regimes. They do not throw on inaccuracy; the returned estimate
// says how far to trust the value (infinity when the method did not converge).

/// Taylor series accumulated in binary128 arithmetic, which absorbs the
/// cancellation between large terms off the positive real axis.
MLResult mittag_leffler_series(FractionalOrder alpha, Complex z, const MLParams& params = {});

/// Large-|z| expansion: exp(z^(1/alpha))/alpha (when |arg z| < alpha pi)
/// minus sum_k z^-k / Gamma(1 - alpha k), truncated at its smallest term.
MLResult mittag_leffler_asymptotic(FractionalOrder alpha, Complex z,
                                   const MLParams& params = {});

/// Inverse Laplace integral on a Hankel contour made of two rays
/// arg s = +-phi, plus the residue at s = z^(1/alpha) when it lies inside.
MLResult mittag_leffler_contour(FractionalOrder alpha, Complex z, const MLParams& params = {});

/// E_alpha(i kappa(k) t^alpha); exp(i kappa t) exactly at alpha = 1.
/// Throws DomainError for t < 0.
Complex propagator(const DispersionModel& model, FractionalOrder alpha, double k, double t,
                   const MLParams& params = {});

/// Same propagator for an already-evaluated symbol kappa.
Complex propagator_for_symbol(FractionalOrder alpha, double kappa, double t,
                              const MLParams& params = {});

}  // namespace fracwave
