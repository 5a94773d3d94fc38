#pragma once

// Pseudo-spectral evolution on a periodic domain [0, L).
//
// DFT bin j carries the basis function exp(+i k_j x), k_j = 2 pi s_j / L with
// s_j the signed bin index. Normal modes are written exp(i(omega t - k x)), so
// bin j corresponds to the physical wave number -k_j and is multiplied by
// E_alpha(i kappa(-k_j) t^alpha). kappa is odd, and the Nyquist bin (which is
// its own partner) receives kappa = 0 so real data stays real at alpha = 1.

#include <span>
#include <vector>

#include "fracwave/mittag_leffler.hpp"
#include "fracwave/types.hpp"

namespace fracwave {

class PeriodicGrid {
 public:
  /// Throws InvalidParameter unless n_points = 2^p with p >= 3 and length > 0.
  PeriodicGrid(std::size_t n_points, double length);

  std::size_t size() const { return n_; }
  double length() const { return length_; }
  double spacing() const { return length_ / static_cast<double>(n_); }
  double x(std::size_t i) const { return static_cast<double>(i) * spacing(); }

  /// Signed index in [-N/2, N/2).
  long signed_index(std::size_t j) const;
  bool is_nyquist(std::size_t j) const { return j == n_ / 2; }

  /// 2 pi s_j / L.
  double wave_number(std::size_t j) const;

  /// Minimal-image separation a - b, in [-L/2, L/2).
  double wrap(double dx) const;

 private:
  std::size_t n_;
  double length_;
};

/// Fourier amplitudes of a field on a periodic grid. The spectrum at t = 0 is
/// retained because fractional propagators do not compose in time.
class SpectralState {
 public:
  static SpectralState from_samples(const PeriodicGrid& grid, std::span<const Complex> samples);
  static SpectralState from_real_samples(const PeriodicGrid& grid, std::span<const double> samples);

  const PeriodicGrid& grid() const { return grid_; }
  double time() const { return time_; }
  const std::vector<Complex>& modes() const { return modes_; }
  const std::vector<Complex>& initial_modes() const { return initial_; }

  /// Inverse transform of the current spectrum.
  std::vector<Complex> field() const;

  /// Largest |Re| imbalance between bin j and the conjugate of bin -j.
  double hermitian_defect() const;

 private:
  friend SpectralState evolve(const SpectralState&, const DispersionModel&, FractionalOrder,
                              double, const MLParams&);
  SpectralState(PeriodicGrid grid, std::vector<Complex> modes);

  PeriodicGrid grid_;
  std::vector<Complex> initial_;
  std::vector<Complex> modes_;
  double time_ = 0.0;
};

/// Propagates the t = 0 spectrum to t_target. ConvergenceError carries the
/// offending bin index.
SpectralState evolve(const SpectralState& state, const DispersionModel& model,
                     FractionalOrder alpha, double t_target, const MLParams& params = {});

/// Gaussian envelope exp(-d^2 / (2 sigma^2)) cos(k0 d), d the minimal-image
/// distance to x0. Throws DomainError when the envelope at distance L/2 is
/// not below 1e-12.
SpectralState wavepacket(const PeriodicGrid& grid, double k0, double sigma, double x0);

struct EnergyMoments {
  double centroid = 0.0;  // in [0, L)
  double spread = 0.0;    // standard deviation of |u|^2 about the centroid
  double energy = 0.0;    // sum |u|^2
};

/// Centroid of |u|^2, unwrapped about the sample of largest energy.
EnergyMoments energy_moments(const PeriodicGrid& grid, std::span<const Complex> field);

struct PacketExperiment {
  PeriodicGrid grid{4096, 512.0};
  double k0 = 0.3;
  double sigma = 20.0;
  double x0 = 128.0;
};

/// Centroid displacement of |u|^2 between t1 and t2, divided by t2 - t1.
/// Throws DomainError when t2 <= t1, t1 < 0, or the energy spread exceeds L/4.
double centroid_velocity(const DispersionModel& model, FractionalOrder alpha,
                         const PacketExperiment& experiment, double t1, double t2,
                         const MLParams& params = {});

}  // namespace fracwave
