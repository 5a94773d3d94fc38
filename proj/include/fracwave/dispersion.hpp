#pragma once

// Complex dispersion relations of the time-fractional kinematic wave and
// linearised KdV equations,
//
//   (i omega)^alpha = i kappa(k),   kappa = c0 k  or  c0 k - mu k^3,
//
// solved on the principal branch as omega(k) = i^(1/alpha - 1) kappa^(1/alpha).
// Normal modes are Re{A exp[i(omega t - k x)]}.

#include "fracwave/types.hpp"

namespace fracwave {

/// kappa(k): c0 k for the kinematic model, c0 k - mu k^3 for KdV.
double spatial_symbol(const DispersionModel& model, double k);

/// d kappa / dk.
double spatial_symbol_derivative(const DispersionModel& model, double k);

/// i^(1/alpha - 1) as exp(i theta). Exactly 1 at alpha = 1; exact quarter
/// turns whenever 1/alpha is an integer.
Complex fractional_unit(FractionalOrder alpha);

// Strict-branch evaluators. For alpha < 1 they throw DomainError when
// kappa(k) <= 0. At alpha = 1 the classical closed forms are used and every
// real k is admissible (phase velocity included: c0 - mu k^2 at k = 0).

Complex omega_bar(const DispersionModel& model, FractionalOrder alpha, double k);

/// omega(k) / k. Throws DomainError at k = 0 for alpha < 1.
Complex phase_velocity(const DispersionModel& model, FractionalOrder alpha, double k);

/// d omega / dk = (unit / alpha) kappa^(1/alpha - 1) kappa'(k).
Complex group_velocity(const DispersionModel& model, FractionalOrder alpha, double k);

/// All three quantities at one wave number. In permissive mode a non-positive
/// kappa (alpha < 1) is evaluated on the principal branch of the complex power
/// and `branch_warning` is set instead of throwing.
struct DispersionPoint {
  double k = 0.0;
  Complex omega;
  Complex phase_velocity;
  Complex group_velocity;
  bool branch_warning = false;
};

DispersionPoint evaluate_point(const DispersionModel& model, FractionalOrder alpha, double k,
                               BranchMode mode = BranchMode::strict);

struct CartesianParts {
  double re = 0.0;
  double im = 0.0;
};

inline CartesianParts velocity_split(Complex v) { return {v.real(), v.imag()}; }

/// Re{A exp[i(omega t - k x)]} for a single wave number.
struct NormalMode {
  double amplitude = 1.0;
  double wave_number = 0.0;
  Complex omega;

  static NormalMode from_model(const DispersionModel& model, FractionalOrder alpha,
                               double amplitude, double k) {
    return {amplitude, k, omega_bar(model, alpha, k)};
  }
};

/// A exp(-Im(omega) t) cos(Re(omega) t - k x).
double evaluate_mode(const NormalMode& mode, double t, double x);

}  // namespace fracwave
