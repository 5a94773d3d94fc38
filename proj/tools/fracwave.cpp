// fracwave: dispersion sweeps, figure data, spectral evolution and
// Mittag-Leffler evaluation for the time-fractional kinematic wave and
// linearised KdV equations.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fracwave/errors.hpp"

namespace cli = fracwave::cli;

int main(int argc, char** argv) {
  CLI::App app{"Complex dispersion relations of time-fractional wave equations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fracwave::kVersion));

  std::string model = "kinematic";
  std::string format = "csv";
  std::string branch = "strict";
  std::string output;

  // sweep
  cli::SweepConfig sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate omega, v_p and v_g over a k range");
  sweep_cmd->add_option("--model", model, "kinematic or kdv")->capture_default_str();
  sweep_cmd->add_option("--alpha", sweep.alpha, "Caputo order, 0 < alpha <= 1")
      ->capture_default_str();
  sweep_cmd->add_option("--c0", sweep.c0, "Wave speed")->capture_default_str();
  sweep_cmd->add_option("--mu", sweep.mu, "KdV dispersion coefficient")->capture_default_str();
  auto* kmin_opt = sweep_cmd->add_option("--kmin", sweep.k_min, "Smallest wave number (default depends on model)");
  auto* kmax_opt = sweep_cmd->add_option("--kmax", sweep.k_max, "Largest wave number (default depends on model)");
  sweep_cmd->add_option("--n", sweep.n_samples, "Number of samples")->capture_default_str();
  sweep_cmd->add_option("--output,-o", output, "Output file (default $FRACWAVE_OUTPUT_DIR/sweep.csv)");
  sweep_cmd->add_option("--format", format, "csv, svg or both")->capture_default_str();
  sweep_cmd->add_option("--branch", branch, "strict or permissive")->capture_default_str();

  // evolve
  cli::EvolveConfig evolve;
  std::string shape = "packet";
  std::string outdir;
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve initial data with the exact propagator");
  evolve_cmd->add_option("--model", model, "kinematic or kdv")->capture_default_str();
  evolve_cmd->add_option("--alpha", evolve.alpha, "Caputo order")->capture_default_str();
  evolve_cmd->add_option("--c0", evolve.c0, "Wave speed")->capture_default_str();
  evolve_cmd->add_option("--mu", evolve.mu, "KdV dispersion coefficient")->capture_default_str();
  evolve_cmd->add_option("--points", evolve.n_points, "Grid size (power of two)")
      ->capture_default_str();
  evolve_cmd->add_option("--length", evolve.length, "Periodic domain length")
      ->capture_default_str();
  evolve_cmd->add_option("--ic", shape, "Initial condition: cosine or packet")
      ->capture_default_str();
  evolve_cmd->add_option("--cycles", evolve.cosine_cycles, "cosine: cycles across the domain")
      ->capture_default_str();
  evolve_cmd->add_option("--k0", evolve.k0, "packet: carrier wave number")->capture_default_str();
  evolve_cmd->add_option("--sigma", evolve.sigma, "packet: envelope width")->capture_default_str();
  evolve_cmd->add_option("--x0", evolve.x0, "packet: centre")->capture_default_str();
  evolve_cmd->add_option("--times", evolve.times, "Output times, ascending")->delimiter(',');
  evolve_cmd->add_option("--outdir", outdir, "Snapshot directory (default $FRACWAVE_OUTPUT_DIR)");

  // crossings
  cli::CrossingsConfig crossings;
  std::string crossings_csv;
  auto* crossings_cmd =
      app.add_subcommand("crossings", "Locate k where Re v_p = Re v_g (linearised KdV)");
  crossings_cmd->add_option("--alpha", crossings.alphas, "Orders, comma separated")
      ->delimiter(',');
  crossings_cmd->add_option("--kmin", crossings.bracket.first, "Bracket start")
      ->capture_default_str();
  crossings_cmd->add_option("--kmax", crossings.bracket.second, "Bracket end")
      ->capture_default_str();
  crossings_cmd->add_option("--tol", crossings.tol, "Residual tolerance")->capture_default_str();
  crossings_cmd->add_option("--c0", crossings.c0, "Wave speed")->capture_default_str();
  crossings_cmd->add_option("--mu", crossings.mu, "KdV dispersion coefficient")
      ->capture_default_str();
  crossings_cmd->add_option("--csv", crossings_csv, "Also write the table as CSV");

  // ml-eval
  double ml_alpha = 1.0;
  double z_re = 0.0;
  double z_im = 0.0;
  auto* ml_cmd = app.add_subcommand("ml-eval", "Evaluate the Mittag-Leffler function E_alpha(z)");
  ml_cmd->add_option("--alpha", ml_alpha, "Order, 0 < alpha <= 1")->required();
  ml_cmd->add_option("--re", z_re, "Re z")->capture_default_str();
  ml_cmd->add_option("--im", z_im, "Im z")->capture_default_str();

  // orders
  int m_max = 2;
  auto* orders_cmd = app.add_subcommand("orders", "List orders with purely imaginary velocities");
  orders_cmd->add_option("--m-max", m_max, "Largest m in alpha = 1/(2(m+1))")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  try {
    if (sweep_cmd->parsed()) {
      sweep.model = cli::parse_model(model);
      sweep.format = cli::parse_format(format);
      sweep.branch_mode = cli::parse_branch(branch);
      const auto [k_lo, k_hi] = cli::default_k_range(sweep.model, sweep.alpha);
      if (kmin_opt->count() == 0) sweep.k_min = k_lo;
      if (kmax_opt->count() == 0) sweep.k_max = k_hi;
      if (output.empty()) {
        output = (cli::default_output_dir() /
                  (sweep.format == cli::OutputFormat::svg ? "sweep.svg" : "sweep.csv"))
                     .string();
      }
      sweep.output_path = output;
      return cli::run_sweep(sweep, std::cout, std::cerr);
    }
    if (evolve_cmd->parsed()) {
      evolve.model = cli::parse_model(model);
      if (shape == "cosine") {
        evolve.shape = cli::InitialShape::cosine;
      } else if (shape == "packet") {
        evolve.shape = cli::InitialShape::packet;
      } else {
        std::cerr << "error: unknown initial condition '" << shape << "'\n";
        return cli::kUsageError;
      }
      evolve.output_dir = outdir.empty() ? cli::default_output_dir() : std::filesystem::path(outdir);
      return cli::run_evolve(evolve, std::cout, std::cerr);
    }
    if (crossings_cmd->parsed()) {
      if (!crossings_csv.empty()) crossings.csv_path = crossings_csv;
      return cli::run_crossings(crossings, std::cout, std::cerr);
    }
    if (ml_cmd->parsed()) return cli::run_ml_eval(ml_alpha, z_re, z_im, std::cout, std::cerr);
    if (orders_cmd->parsed()) return cli::run_orders(m_max, std::cout, std::cerr);
  } catch (const fracwave::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  }
  return cli::kUsageError;
}
