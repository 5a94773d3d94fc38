#include "fracwave/analysis.hpp"

#include <cmath>
#include <sstream>

#include "fracwave/dispersion.hpp"
#include "fracwave/errors.hpp"

namespace fracwave {

std::vector<double> purely_imaginary_orders(int m_max) {
  if (m_max < 0) throw InvalidParameter("m_max must be non-negative");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) out.push_back(1.0 / (2.0 * (m + 1)));
  return out;
}

bool is_purely_imaginary(FractionalOrder alpha, double tol) {
  return std::abs(fractional_unit(alpha).real()) <= tol;
}

CrossingResult find_velocity_crossing(const DispersionModel& model, FractionalOrder alpha,
                                      std::pair<double, double> bracket, double tol,
                                      const NumericPolicy& policy) {
  auto [lo, hi] = bracket;
  if (!(lo < hi)) throw InvalidParameter("crossing bracket must satisfy k_lo < k_hi");
  if (is_purely_imaginary(alpha, policy.imaginary_order_tol)) {
    throw DegenerateCrossing("real parts of v_p and v_g vanish identically for alpha = " +
                             std::to_string(alpha.value()));
  }
  // kappa > 0 on the whole bracket: k > 0, and below the KdV root sqrt(c0/mu)
  const double upper = model.is_kdv() ? std::sqrt(model.c0() / model.mu()) : INFINITY;
  if (!(lo > 0.0) || !(hi < upper)) {
    std::ostringstream msg;
    msg << "bracket (" << lo << ", " << hi << ") leaves the region kappa(k) > 0";
    throw DomainError(msg.str(), lo > 0.0 ? hi : lo);
  }

  auto gap = [&](double k) {
    const DispersionPoint p = evaluate_point(model, alpha, k);
    return p.phase_velocity.real() - p.group_velocity.real();
  };

  double f_lo = gap(lo);
  double f_hi = gap(hi);
  if (f_lo == 0.0) hi = lo, f_hi = f_lo;
  if (f_hi == 0.0) lo = hi, f_lo = f_hi;
  if (f_lo * f_hi > 0.0) {
    std::ostringstream msg;
    msg << "Re v_p - Re v_g does not change sign on (" << bracket.first << ", " << bracket.second
        << ")";
    throw NoSignChange(msg.str());
  }

  while (hi - lo > policy.bisection_width) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = gap(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  // secant from the bracket ends, clamped to the bracket
  double k0 = lo;
  double k1 = hi;
  double f0 = f_lo;
  double f1 = f_hi;
  double k_star = (lo == hi) ? lo : (std::abs(f_lo) < std::abs(f_hi) ? lo : hi);
  for (int it = 0; it < policy.secant_iterations && k0 != k1 && f1 != f0; ++it) {
    double k2 = k1 - f1 * (k1 - k0) / (f1 - f0);
    if (!(k2 >= bracket.first && k2 <= bracket.second)) break;
    const double f2 = gap(k2);
    k0 = k1;
    f0 = f1;
    k1 = k2;
    f1 = f2;
    k_star = k2;
    if (f2 == 0.0 || std::abs(k1 - k0) <= 1e-16 * std::abs(k1)) break;
  }

  const DispersionPoint p = evaluate_point(model, alpha, k_star);
  CrossingResult out;
  out.k_star = k_star;
  out.v_common = p.phase_velocity;
  out.bracket = bracket;
  out.residual = std::abs(p.phase_velocity - p.group_velocity);
  if (out.residual > tol) {
    std::ostringstream msg;
    msg << "crossing residual " << out.residual << " above tolerance " << tol << " at k = "
        << k_star;
    throw ConvergenceError(msg.str(), out.residual);
  }
  return out;
}

ClassicalZeros classical_zeros(const DispersionModel& model) {
  ClassicalZeros z;
  if (!model.is_kdv()) return z;
  const double root = std::sqrt(model.c0() / model.mu());
  z.omega = {0.0, root};
  z.phase_velocity = {root};
  z.group_velocity = {std::sqrt(model.c0() / (3.0 * model.mu()))};
  return z;
}

}  // namespace fracwave
