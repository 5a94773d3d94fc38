#include "fracwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracwave/dispersion.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/fft.hpp"

namespace fracwave {

PeriodicGrid::PeriodicGrid(std::size_t n_points, double length) : n_(n_points), length_(length) {
  if (!is_power_of_two(n_points) || n_points < 8) {
    throw InvalidParameter("grid size must be a power of two >= 8");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidParameter("domain length must be positive and finite");
  }
}

long PeriodicGrid::signed_index(std::size_t j) const {
  const long n = static_cast<long>(n_);
  const long s = static_cast<long>(j);
  return s < n / 2 ? s : s - n;
}

double PeriodicGrid::wave_number(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(signed_index(j)) / length_;
}

double PeriodicGrid::wrap(double dx) const {
  double w = std::fmod(dx + 0.5 * length_, length_);
  if (w < 0.0) w += length_;
  return w - 0.5 * length_;
}

SpectralState::SpectralState(PeriodicGrid grid, std::vector<Complex> modes)
    : grid_(grid), initial_(modes), modes_(std::move(modes)) {}

SpectralState SpectralState::from_samples(const PeriodicGrid& grid,
                                          std::span<const Complex> samples) {
  if (samples.size() != grid.size()) {
    throw SizeError("sample count does not match the grid size");
  }
  return SpectralState(grid, fft_forward(samples));
}

SpectralState SpectralState::from_real_samples(const PeriodicGrid& grid,
                                               std::span<const double> samples) {
  std::vector<Complex> c(samples.begin(), samples.end());
  return from_samples(grid, c);
}

std::vector<Complex> SpectralState::field() const { return fft_inverse(modes_); }

double SpectralState::hermitian_defect() const {
  const std::size_t n = modes_.size();
  double scale = 0.0;
  double defect = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    scale = std::max(scale, std::abs(modes_[j]));
    defect = std::max(defect, std::abs(modes_[j] - std::conj(modes_[(n - j) % n])));
  }
  return scale == 0.0 ? 0.0 : defect / scale;
}

SpectralState evolve(const SpectralState& state, const DispersionModel& model,
                     FractionalOrder alpha, double t_target, const MLParams& params) {
  if (!(t_target >= 0.0)) throw DomainError("evolution time must be non-negative");
  const PeriodicGrid& grid = state.grid();
  const std::size_t n = grid.size();
  SpectralState out = state;
  out.time_ = t_target;
  out.modes_ = state.initial_;

  for (std::size_t j = 0; j <= n / 2; ++j) {
    Complex factor{1.0, 0.0};
    if (!grid.is_nyquist(j)) {
      // bin j is the physical wave number -k_j
      const double kappa = -spatial_symbol(model, grid.wave_number(j));
      try {
        factor = propagator_for_symbol(alpha, kappa, t_target, params);
      } catch (const ConvergenceError& e) {
        std::ostringstream msg;
        msg << "propagator failed for mode " << j << ": " << e.what();
        throw ConvergenceError(msg.str(), e.error_estimate(), j);
      }
    }
    out.modes_[j] *= factor;
    const std::size_t partner = (n - j) % n;
    if (partner != j) out.modes_[partner] *= std::conj(factor);
  }
  return out;
}

SpectralState wavepacket(const PeriodicGrid& grid, double k0, double sigma, double x0) {
  if (!(sigma > 0.0)) throw DomainError("packet width sigma must be positive");
  const double half = 0.5 * grid.length();
  const double edge = std::exp(-half * half / (2.0 * sigma * sigma));
  if (!(edge < 1e-12)) {
    std::ostringstream msg;
    msg << "packet width sigma = " << sigma << " wraps around a domain of length "
        << grid.length() << " (edge envelope " << edge << ")";
    throw DomainError(msg.str());
  }
  std::vector<double> u(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = grid.wrap(grid.x(i) - x0);
    u[i] = std::exp(-d * d / (2.0 * sigma * sigma)) * std::cos(k0 * d);
  }
  return SpectralState::from_real_samples(grid, u);
}

EnergyMoments energy_moments(const PeriodicGrid& grid, std::span<const Complex> field) {
  if (field.size() != grid.size()) throw SizeError("field does not match the grid size");
  std::size_t peak = 0;
  double peak_energy = -1.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double e = std::norm(field[i]);
    if (e > peak_energy) {
      peak_energy = e;
      peak = i;
    }
  }
  const double reference = grid.x(peak);
  double w = 0.0;
  double first = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double e = std::norm(field[i]);
    const double d = grid.wrap(grid.x(i) - reference);
    w += e;
    first += e * d;
    second += e * d * d;
  }
  EnergyMoments m;
  m.energy = w;
  if (w == 0.0) return m;
  const double mean = first / w;
  m.spread = std::sqrt(std::max(0.0, second / w - mean * mean));
  double c = std::fmod(reference + mean, grid.length());
  if (c < 0.0) c += grid.length();
  m.centroid = c;
  return m;
}

double centroid_velocity(const DispersionModel& model, FractionalOrder alpha,
                         const PacketExperiment& experiment, double t1, double t2,
                         const MLParams& params) {
  if (!(t1 >= 0.0) || !(t2 > t1)) {
    throw DomainError("centroid velocity needs 0 <= t1 < t2");
  }
  const PeriodicGrid& grid = experiment.grid;
  const SpectralState initial = wavepacket(grid, experiment.k0, experiment.sigma, experiment.x0);
  const double limit = 0.25 * grid.length();

  auto moments_at = [&](double t) {
    const EnergyMoments m = energy_moments(grid, evolve(initial, model, alpha, t, params).field());
    if (m.spread > limit) {
      std::ostringstream msg;
      msg << "packet spread " << m.spread << " exceeds L/4 = " << limit << " at t = " << t;
      throw DomainError(msg.str());
    }
    return m;
  };
  const EnergyMoments a = moments_at(t1);
  const EnergyMoments b = moments_at(t2);
  return grid.wrap(b.centroid - a.centroid) / (t2 - t1);
}

}  // namespace fracwave
