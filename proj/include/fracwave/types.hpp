#pragma once

#include <complex>
#include <string_view>

namespace fracwave {

inline constexpr std::string_view kVersion = "0.1.0";

using Complex = std::complex<double>;

/// Caputo order of the time derivative, 0 < alpha <= 1.
class FractionalOrder {
 public:
  /// Throws InvalidParameter unless 0 < alpha <= 1.
  explicit FractionalOrder(double alpha);

  double value() const { return alpha_; }
  double reciprocal() const { return 1.0 / alpha_; }
  bool is_classical() const { return alpha_ == 1.0; }

  /// Polar angle of the fractional unit, (1/alpha - 1) * pi / 2.
  double unit_angle() const;

  friend bool operator==(const FractionalOrder&, const FractionalOrder&) = default;

 private:
  double alpha_;
};

enum class ModelKind { kinematic_wave, linearised_kdv };

std::string_view to_string(ModelKind kind);

/// u_t + c0 u_x = 0, or u_t + c0 u_x + mu u_xxx = 0.
class DispersionModel {
 public:
  /// Throws InvalidParameter unless c0 > 0 and mu > 0.
  DispersionModel(ModelKind kind, double c0 = 1.0, double mu = 1.0);

  static DispersionModel kinematic(double c0 = 1.0) { return {ModelKind::kinematic_wave, c0}; }
  static DispersionModel kdv(double c0 = 1.0, double mu = 1.0) {
    return {ModelKind::linearised_kdv, c0, mu};
  }

  ModelKind kind() const { return kind_; }
  double c0() const { return c0_; }
  double mu() const { return mu_; }
  bool is_kdv() const { return kind_ == ModelKind::linearised_kdv; }

 private:
  ModelKind kind_;
  double c0_;
  double mu_;
};

enum class BranchMode { strict, permissive };

/// Default tolerances used by checks and solvers across the library.
struct NumericPolicy {
  BranchMode branch_mode = BranchMode::strict;
  double defining_relation_tol = 1e-12;
  double split_tol = 1e-13;
  double product_identity_tol = 1e-14;
  double derivative_tol = 1e-6;
  double derivative_step = 1e-5;  // h = step * max(1, k)
  double kinematic_ratio_tol = 1e-13;
  double kdv_ratio_tol = 1e-12;
  double classical_tol = 1e-14;
  double imaginary_order_tol = 1e-12;
  double crossing_tol = 1e-10;
  double bisection_width = 1e-6;
  int secant_iterations = 20;
};

}  // namespace fracwave
