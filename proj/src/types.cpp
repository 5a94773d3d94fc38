#include "fracwave/types.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracwave/errors.hpp"

namespace fracwave {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidParameter("fractional order must satisfy 0 < alpha <= 1, got " +
                           std::to_string(alpha));
  }
}

double FractionalOrder::unit_angle() const {
  return (1.0 / alpha_ - 1.0) * std::numbers::pi / 2.0;
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kinematic_wave:
      return "kinematic";
    case ModelKind::linearised_kdv:
      return "kdv";
  }
  return "unknown";
}

DispersionModel::DispersionModel(ModelKind kind, double c0, double mu)
    : kind_(kind), c0_(c0), mu_(mu) {
  if (!(c0 > 0.0) || !std::isfinite(c0)) {
    throw InvalidParameter("wave speed c0 must be positive and finite");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw InvalidParameter("dispersion coefficient mu must be positive and finite");
  }
}

}  // namespace fracwave
