#include "fracwave/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "fracwave/dispersion.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/gamma.hpp"
#include "quad_gamma.hpp"
#include "quadrature.hpp"

namespace fracwave {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
// largest Re(w) for which exp(w) is finite in double
constexpr double kMaxExponent = 709.0;

double relative(double err, Complex value) {
  const double mag = std::abs(value);
  if (mag == 0.0) return err == 0.0 ? 0.0 : kInf;
  return err / mag;
}

[[noreturn]] void throw_overflow(Complex z) {
  std::ostringstream msg;
  msg << "E_alpha(z) overflows double precision at z = " << z;
  throw ConvergenceError(msg.str(), kInf);
}

}  // namespace

void MLParams::validate() const {
  if (!(series_radius > 0.0)) throw InvalidParameter("series_radius must be positive");
  if (!(series_tol > 0.0 && series_tol < 1.0)) {
    throw InvalidParameter("series_tol must lie in (0, 1)");
  }
  if (max_terms < 10) throw InvalidParameter("max_terms must be at least 10");
  if (!(accuracy_goal > 0.0 && accuracy_goal < 1.0)) {
    throw InvalidParameter("accuracy_goal must lie in (0, 1)");
  }
}

std::string_view to_string(MLRegime regime) {
  switch (regime) {
    case MLRegime::exact:
      return "exact";
    case MLRegime::series:
      return "series";
    case MLRegime::asymptotic:
      return "asymptotic";
    case MLRegime::contour:
      return "contour";
  }
  return "unknown";
}

MLResult mittag_leffler_series(FractionalOrder alpha, Complex z, const MLParams& params) {
  using detail::quad;
  const double a = alpha.value();
  const double r = std::abs(z);
  MLResult out{{1.0, 0.0}, 0.0, MLRegime::series};
  if (r == 0.0) return out;

  // The largest term is about exp(|z|^(1/alpha)); beyond binary128 range the
  // series is useless.
  if (std::pow(r, alpha.reciprocal()) > 11000.0) {
    out.error_estimate = kInf;
    return out;
  }

  const quad zr = z.real();
  const quad zi = z.imag();
  quad pr = 1;
  quad pi = 0;
  quad sr = 1;
  quad si = 0;
  quad abs_sum = 1;
  quad last = 1;
  const quad log_r = logq(quad(r));
  const double peak = std::pow(r, alpha.reciprocal()) / a;  // index of the largest term

  bool converged = false;
  for (int n = 1; n <= params.max_terms; ++n) {
    const quad npr = pr * zr - pi * zi;
    const quad npi = pr * zi + pi * zr;
    pr = npr;
    pi = npi;
    const quad lg = detail::log_gamma_quad(quad(a) * n + 1);
    const quad scale = expq(-lg);
    const quad tr = pr * scale;
    const quad ti = pi * scale;
    sr += tr;
    si += ti;
    const quad mag = expq(n * log_r - lg);
    abs_sum += mag;
    last = mag;
    const quad sum_mag = sqrtq(sr * sr + si * si);
    if (n > peak && mag <= quad(params.series_tol) * sum_mag * quad(1e-3)) {
      converged = true;
      break;
    }
  }

  out.value = {static_cast<double>(sr), static_cast<double>(si)};
  if (!converged) {
    out.error_estimate = kInf;
    return out;
  }
  // binary128 rounding over the whole sum, plus the truncated tail
  const double absolute = static_cast<double>(abs_sum * quad(1e-31) + 2 * last);
  out.error_estimate = relative(absolute, out.value) + std::numeric_limits<double>::epsilon();
  return out;
}

MLResult mittag_leffler_asymptotic(FractionalOrder alpha, Complex z, const MLParams& params) {
  const double a = alpha.value();
  const double r = std::abs(z);
  const double arg = std::arg(z);
  MLResult out{{0.0, 0.0}, kInf, MLRegime::asymptotic};
  if (r == 0.0) return out;

  // Exponential contribution from the saddle s = z^(1/alpha).
  const Complex s = std::polar(std::pow(r, alpha.reciprocal()), arg / a);
  const double arg_s = std::abs(arg) / a;  // in [0, pi/alpha]
  Complex exp_term{};
  double exp_mag = 0.0;
  if (arg_s < kPi) {
    if (s.real() > kMaxExponent) throw_overflow(z);
    exp_term = std::exp(s) / a;
    exp_mag = std::abs(exp_term);
  } else {
    exp_mag = std::exp(std::min(s.real(), kMaxExponent)) / a;
  }

  // Algebraic series -sum_k z^-k Gamma(alpha k) sin(pi alpha k) / pi.
  const double log_r = std::log(r);
  Complex alg{};
  double prev_env = kInf;
  double tail = kInf;
  for (int k = 1; k <= params.max_terms; ++k) {
    const double ak = a * k;
    const double log_env = log_gamma(ak) - k * log_r - std::log(kPi);
    const double env = std::exp(log_env);
    if (env > prev_env) {
      // passed the smallest term without meeting the tolerance
      tail = prev_env;
      break;
    }
    const double current = std::abs(alg + exp_term);
    if (k > 1 && env <= params.series_tol * current) {
      tail = env;
      break;
    }
    alg -= std::polar(env, -k * arg) * sin_pi(ak);
    prev_env = env;
  }

  out.value = exp_term + alg;
  // Near the Stokes line |arg s| = pi the weight of the exponential switches
  // smoothly over an angular width ~ (|s|/2)^(-1/2); bound the ambiguity.
  const double stokes_distance = std::abs(kPi - arg_s);
  const double switching = exp_mag * std::exp(-0.5 * stokes_distance * stokes_distance * std::abs(s));
  out.error_estimate = relative(tail + switching, out.value);
  return out;
}

MLResult mittag_leffler_contour(FractionalOrder alpha, Complex z, const MLParams& params) {
  const double a = alpha.value();
  const double r = std::abs(z);
  MLResult out{{1.0, 0.0}, 0.0, MLRegime::contour};
  if (r == 0.0) return out;

  const double arg_s = std::abs(std::arg(z)) / a;
  // keep the rays at least 0.2 pi away from the pole direction
  const double phi = std::abs(arg_s - kPi) >= 0.2 * kPi ? kPi : 0.6 * kPi;

  Complex residue{};
  if (arg_s < phi) {
    const Complex s = std::polar(std::pow(r, alpha.reciprocal()), std::arg(z) / a);
    if (s.real() > kMaxExponent) throw_overflow(z);
    residue = std::exp(s) / a;
  }

  // Substituting u = |s|^alpha on each ray s = |s| e^(+-i phi) removes the
  // s^(alpha - 1) endpoint singularity.
  const Complex rot_up = std::polar(1.0, a * phi);
  const Complex rot_dn = std::conj(rot_up);
  const Complex ray_up = std::polar(1.0, phi);
  const Complex ray_dn = std::conj(ray_up);
  const Complex prefactor = 1.0 / (Complex(0.0, 2.0 * kPi) * a);
  const double inv = alpha.reciprocal();
  auto integrand = [&](double u) {
    const double w = std::pow(u, inv);
    const Complex up = rot_up * std::exp(w * ray_up) / (u * rot_up - z);
    const Complex dn = rot_dn * std::exp(w * ray_dn) / (u * rot_dn - z);
    return prefactor * (up - dn);
  };

  const double decay = -std::cos(phi);
  const double u_max = std::pow(45.0 / decay, a);
  std::vector<double> breaks{0.0};
  for (int j = 8; j >= 1; --j) breaks.push_back(u_max * std::ldexp(1.0, -j));
  if (r < u_max) breaks.push_back(r);
  breaks.push_back(u_max);
  std::sort(breaks.begin(), breaks.end());

  // the residue is part of the result, so it sets an absolute floor
  const auto q = detail::integrate_adaptive(integrand, breaks, 1e-15, 1e-15 * std::abs(residue));
  out.value = residue + q.value;
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * (q.l1 + std::abs(residue));
  out.error_estimate = q.converged ? relative(q.error + rounding, out.value) : kInf;
  (void)params;
  return out;
}

MLResult mittag_leffler_eval(FractionalOrder alpha, Complex z, const MLParams& params) {
  params.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("Mittag-Leffler argument must be finite");
  }
  if (z == Complex{}) return {{1.0, 0.0}, 0.0, MLRegime::exact};
  if (alpha.is_classical()) {
    if (z.real() > kMaxExponent) throw_overflow(z);
    return {std::exp(z), std::numeric_limits<double>::epsilon(), MLRegime::exact};
  }

  const double r = std::abs(z);
  double best = kInf;
  if (r <= params.series_radius) {
    MLResult s = mittag_leffler_series(alpha, z, params);
    if (s.error_estimate <= params.accuracy_goal) return s;
    best = std::min(best, s.error_estimate);
  }
  MLResult asym = mittag_leffler_asymptotic(alpha, z, params);
  if (asym.error_estimate <= params.accuracy_goal) return asym;
  best = std::min(best, asym.error_estimate);

  MLResult c = mittag_leffler_contour(alpha, z, params);
  if (c.error_estimate <= params.accuracy_goal) return c;
  best = std::min(best, c.error_estimate);

  std::ostringstream msg;
  msg << "Mittag-Leffler evaluation did not reach " << params.accuracy_goal
      << " at alpha = " << alpha.value() << ", z = " << z << " (best estimate " << best << ")";
  throw ConvergenceError(msg.str(), best);
}

Complex propagator_for_symbol(FractionalOrder alpha, double kappa, double t,
                              const MLParams& params) {
  if (!(t >= 0.0)) throw DomainError("propagator time must be non-negative");
  if (t == 0.0 || kappa == 0.0) return {1.0, 0.0};
  if (alpha.is_classical()) return std::polar(1.0, kappa * t);
  const Complex z{0.0, kappa * std::pow(t, alpha.value())};
  return mittag_leffler(alpha, z, params);
}

Complex propagator(const DispersionModel& model, FractionalOrder alpha, double k, double t,
                   const MLParams& params) {
  return propagator_for_symbol(alpha, spatial_symbol(model, k), t, params);
}

}  // namespace fracwave
