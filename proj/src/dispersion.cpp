#include "fracwave/dispersion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracwave/errors.hpp"

namespace fracwave {
namespace {

[[noreturn]] void throw_nonpositive_symbol(double k, double kappa) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "kappa(k) = " << kappa << " <= 0 at k = " << k
      << " has no principal-branch dispersion relation for alpha < 1";
  throw DomainError(msg.str(), k);
}

// Principal branch of x^s for real x; negative x lies on arg = pi.
Complex real_power(double x, double s) {
  if (x > 0.0) return {std::pow(x, s), 0.0};
  if (x == 0.0) return {0.0, 0.0};
  return std::polar(std::pow(-x, s), std::numbers::pi * s);
}

}  // namespace

double spatial_symbol(const DispersionModel& model, double k) {
  if (model.is_kdv()) return model.c0() * k - model.mu() * k * k * k;
  return model.c0() * k;
}

double spatial_symbol_derivative(const DispersionModel& model, double k) {
  if (model.is_kdv()) return model.c0() - 3.0 * model.mu() * k * k;
  return model.c0();
}

Complex fractional_unit(FractionalOrder alpha) {
  if (alpha.is_classical()) return {1.0, 0.0};
  const double n = alpha.reciprocal();
  const double m = std::round(n);
  if (std::abs(n - m) <= 4.0 * std::numeric_limits<double>::epsilon() * n) {
    switch (static_cast<long long>(m - 1.0) % 4) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  return std::polar(1.0, alpha.unit_angle());
}

DispersionPoint evaluate_point(const DispersionModel& model, FractionalOrder alpha, double k,
                               BranchMode mode) {
  DispersionPoint p;
  p.k = k;
  const double kappa = spatial_symbol(model, k);
  const double dkappa = spatial_symbol_derivative(model, k);

  if (alpha.is_classical()) {
    p.omega = {kappa, 0.0};
    p.phase_velocity = {model.is_kdv() ? model.c0() - model.mu() * k * k : model.c0(), 0.0};
    p.group_velocity = {dkappa, 0.0};
    return p;
  }

  if (kappa <= 0.0) {
    if (mode == BranchMode::strict) throw_nonpositive_symbol(k, kappa);
    p.branch_warning = true;
  }
  if (k == 0.0) {
    throw DomainError("phase velocity is undefined at k = 0 for alpha < 1", k);
  }

  const Complex unit = fractional_unit(alpha);
  const double inv = alpha.reciprocal();
  p.omega = unit * real_power(kappa, inv);
  p.phase_velocity = p.omega / k;
  p.group_velocity = unit * inv * real_power(kappa, inv - 1.0) * dkappa;
  return p;
}

Complex omega_bar(const DispersionModel& model, FractionalOrder alpha, double k) {
  const double kappa = spatial_symbol(model, k);
  if (alpha.is_classical()) return {kappa, 0.0};
  if (kappa <= 0.0) throw_nonpositive_symbol(k, kappa);
  return fractional_unit(alpha) * std::pow(kappa, alpha.reciprocal());
}

Complex phase_velocity(const DispersionModel& model, FractionalOrder alpha, double k) {
  return evaluate_point(model, alpha, k).phase_velocity;
}

Complex group_velocity(const DispersionModel& model, FractionalOrder alpha, double k) {
  return evaluate_point(model, alpha, k).group_velocity;
}

double evaluate_mode(const NormalMode& mode, double t, double x) {
  return mode.amplitude * std::exp(-mode.omega.imag() * t) *
         std::cos(mode.omega.real() * t - mode.wave_number * x);
}

}  // namespace fracwave
