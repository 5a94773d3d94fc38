#pragma once

#include <utility>
#include <vector>

#include "fracwave/types.hpp"

namespace fracwave {

/// alpha = 1 / (2(m + 1)) for m = 0..m_max, largest first. These are the
/// orders whose fractional unit is purely imaginary.
std::vector<double> purely_imaginary_orders(int m_max);

/// |cos((1/alpha - 1) pi / 2)| <= tol.
bool is_purely_imaginary(FractionalOrder alpha, double tol = 1e-12);

struct CrossingResult {
  double k_star = 0.0;
  Complex v_common;  // phase velocity at k_star
  std::pair<double, double> bracket;
  double residual = 0.0;  // |v_p(k_star) - v_g(k_star)|
};

/// Root of Re v_p(k) - Re v_g(k) inside `bracket`: bisection down to
/// `policy.bisection_width`, then secant polishing.
///
/// Throws DegenerateCrossing when alpha is a purely imaginary order,
/// NoSignChange when the bracket does not straddle a root, DomainError when
/// the bracket leaves kappa > 0, and ConvergenceError when the residual stays
/// above `tol`.
CrossingResult find_velocity_crossing(const DispersionModel& model, FractionalOrder alpha,
                                      std::pair<double, double> bracket, double tol = 1e-10,
                                      const NumericPolicy& policy = {});

struct ClassicalZeros {
  std::vector<double> omega;
  std::vector<double> phase_velocity;
  std::vector<double> group_velocity;
};

/// Non-negative zeros of omega = kappa, v_p and v_g at alpha = 1. Empty for
/// the kinematic model.
ClassicalZeros classical_zeros(const DispersionModel& model);

}  // namespace fracwave
