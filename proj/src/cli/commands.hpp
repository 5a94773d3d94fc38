#pragma once

// Subcommand implementations behind the fracwave executable. Each returns a
// process exit code: 0 success, 2 usage error, 3 numeric or domain failure.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fracwave/types.hpp"

namespace fracwave::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 2, kNumericError = 3 };

enum class OutputFormat { csv, svg, both };

/// Directory used for outputs when no explicit path is given:
/// $FRACWAVE_OUTPUT_DIR if set, otherwise the working directory.
std::filesystem::path default_output_dir();

ModelKind parse_model(const std::string& name);
OutputFormat parse_format(const std::string& name);
BranchMode parse_branch(const std::string& name);

struct SweepConfig {
  ModelKind model = ModelKind::kinematic_wave;
  double c0 = 1.0;
  double mu = 1.0;
  double alpha = 1.0;
  double k_min = 0.01;
  double k_max = 2.0;
  int n_samples = 200;
  std::filesystem::path output_path = "sweep.csv";
  OutputFormat format = OutputFormat::csv;
  BranchMode branch_mode = BranchMode::strict;
};

/// k range used when a sweep does not specify one: (0.01, 2] for the
/// kinematic wave, (0.05, 0.95) for fractional KdV (inside kappa > 0) and
/// [0, 2] for classical KdV.
std::pair<double, double> default_k_range(ModelKind model, double alpha);

inline constexpr const char* kSweepHeader =
    "k,re_omega,im_omega,re_vp,im_vp,re_vg,im_vg,branch_flag";

int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

enum class InitialShape { cosine, packet };

struct EvolveConfig {
  ModelKind model = ModelKind::kinematic_wave;
  double c0 = 1.0;
  double mu = 1.0;
  double alpha = 1.0;
  std::size_t n_points = 4096;
  double length = 512.0;
  InitialShape shape = InitialShape::packet;
  int cosine_cycles = 1;  // cosine: u0 = cos(2 pi m x / L)
  double k0 = 0.3;
  double sigma = 20.0;
  double x0 = 128.0;
  std::vector<double> times{0.0};
  std::filesystem::path output_dir = ".";
};

int run_evolve(const EvolveConfig& config, std::ostream& out, std::ostream& err);

struct CrossingsConfig {
  ModelKind model = ModelKind::linearised_kdv;
  double c0 = 1.0;
  double mu = 1.0;
  std::vector<double> alphas{0.75};
  std::pair<double, double> bracket{0.05, 0.95};
  double tol = 1e-10;
  std::optional<std::filesystem::path> csv_path;
};

int run_crossings(const CrossingsConfig& config, std::ostream& out, std::ostream& err);

int run_ml_eval(double alpha, double z_re, double z_im, std::ostream& out, std::ostream& err);

int run_orders(int m_max, std::ostream& out, std::ostream& err);

}  // namespace fracwave::cli
