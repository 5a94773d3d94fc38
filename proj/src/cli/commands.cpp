#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "fracwave/analysis.hpp"
#include "fracwave/dispersion.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/mittag_leffler.hpp"
#include "fracwave/spectral.hpp"
#include "svg.hpp"

namespace fracwave::cli {
namespace {

bool write_file(const std::filesystem::path& path, const std::string& content, std::ostream& err) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path.string() << " for writing\n";
    return false;
  }
  f << content;
  return static_cast<bool>(f);
}

std::string format_complex(Complex v, int digits) {
  std::string s = format_double(v.real(), digits);
  s += v.imag() < 0.0 ? " - " : " + ";
  s += format_double(std::abs(v.imag()), digits);
  s += "i";
  return s;
}

}  // namespace

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv("FRACWAVE_OUTPUT_DIR"); env && *env) return env;
  return ".";
}

ModelKind parse_model(const std::string& name) {
  if (name == "kinematic") return ModelKind::kinematic_wave;
  if (name == "kdv") return ModelKind::linearised_kdv;
  throw InvalidParameter("unknown model '" + name + "' (expected kinematic or kdv)");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "svg") return OutputFormat::svg;
  if (name == "both") return OutputFormat::both;
  throw InvalidParameter("unknown format '" + name + "' (expected csv, svg or both)");
}

BranchMode parse_branch(const std::string& name) {
  if (name == "strict") return BranchMode::strict;
  if (name == "permissive") return BranchMode::permissive;
  throw InvalidParameter("unknown branch mode '" + name + "' (expected strict or permissive)");
}

// ---------------------------------------------------------------------------
// sweep

std::pair<double, double> default_k_range(ModelKind model, double alpha) {
  if (model == ModelKind::kinematic_wave) return {0.01, 2.0};
  if (alpha < 1.0) return {0.05, 0.95};
  return {0.0, 2.0};
}

int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<DispersionModel> model;
  std::optional<FractionalOrder> alpha;
  try {
    model.emplace(config.model, config.c0, config.mu);
    alpha.emplace(config.alpha);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (!(config.k_min < config.k_max) || !std::isfinite(config.k_min) ||
      !std::isfinite(config.k_max)) {
    err << "error: sweep needs finite k_min < k_max\n";
    return kUsageError;
  }
  if (config.n_samples < 2) {
    err << "error: sweep needs at least 2 samples\n";
    return kUsageError;
  }

  const auto n = static_cast<std::size_t>(config.n_samples);
  std::vector<DispersionPoint> rows;
  rows.reserve(n);
  const double step = (config.k_max - config.k_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = (i + 1 == n) ? config.k_max : config.k_min + static_cast<double>(i) * step;
    try {
      rows.push_back(evaluate_point(*model, *alpha, k, config.branch_mode));
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kNumericError;
    }
  }

  std::filesystem::path csv_path = config.output_path;
  std::filesystem::path svg_path = config.output_path;
  if (config.format == OutputFormat::both) {
    csv_path.replace_extension(".csv");
    svg_path.replace_extension(".svg");
  }

  if (config.format != OutputFormat::svg) {
    std::ostringstream csv;
    csv << kSweepHeader << '\n';
    for (const DispersionPoint& p : rows) {
      write_csv_row(csv, {p.k, p.omega.real(), p.omega.imag(), p.phase_velocity.real(),
                          p.phase_velocity.imag(), p.group_velocity.real(),
                          p.group_velocity.imag(), p.branch_warning ? 1.0 : 0.0});
    }
    if (!write_file(csv_path, csv.str(), err)) return kUsageError;
    out << "wrote " << csv_path.string() << " (" << rows.size() << " rows)\n";
  }

  if (config.format != OutputFormat::csv) {
    std::ostringstream title;
    title << (config.model == ModelKind::kinematic_wave ? "Kinematic wave" : "Linearised KdV")
          << ", alpha = " << format_double(config.alpha, 6);
    LinePlot plot(title.str(), "wave number k", "velocity");
    PlotSeries re_vp{"Re v_p", {}, {}, "#1f77b4", false};
    PlotSeries im_vp{"Im v_p", {}, {}, "#1f77b4", true};
    PlotSeries re_vg{"Re v_g", {}, {}, "#d62728", false};
    PlotSeries im_vg{"Im v_g", {}, {}, "#d62728", true};
    for (const DispersionPoint& p : rows) {
      for (PlotSeries* s : {&re_vp, &im_vp, &re_vg, &im_vg}) s->x.push_back(p.k);
      re_vp.y.push_back(p.phase_velocity.real());
      im_vp.y.push_back(p.phase_velocity.imag());
      re_vg.y.push_back(p.group_velocity.real());
      im_vg.y.push_back(p.group_velocity.imag());
    }
    plot.add(std::move(re_vp));
    plot.add(std::move(im_vp));
    plot.add(std::move(re_vg));
    plot.add(std::move(im_vg));
    if (!write_file(svg_path, plot.render(), err)) return kUsageError;
    out << "wrote " << svg_path.string() << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// evolve

int run_evolve(const EvolveConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<DispersionModel> model;
  std::optional<FractionalOrder> alpha;
  std::optional<PeriodicGrid> grid;
  try {
    model.emplace(config.model, config.c0, config.mu);
    alpha.emplace(config.alpha);
    grid.emplace(config.n_points, config.length);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (config.times.empty()) {
    err << "error: at least one output time is required\n";
    return kUsageError;
  }
  for (std::size_t i = 0; i < config.times.size(); ++i) {
    const double t = config.times[i];
    if (!(t >= 0.0) || !std::isfinite(t) || (i > 0 && !(t > config.times[i - 1]))) {
      err << "error: times must be non-negative and strictly ascending\n";
      return kUsageError;
    }
  }

  std::optional<SpectralState> initial;
  nlohmann::json ic;
  try {
    if (config.shape == InitialShape::cosine) {
      std::vector<double> u(grid->size());
      const double k = 2.0 * std::numbers::pi * config.cosine_cycles / grid->length();
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::cos(k * grid->x(i));
      initial = SpectralState::from_real_samples(*grid, u);
      ic = {{"shape", "cosine"}, {"cycles", config.cosine_cycles}, {"wave_number", k}};
    } else {
      initial = wavepacket(*grid, config.k0, config.sigma, config.x0);
      ic = {{"shape", "packet"}, {"k0", config.k0}, {"sigma", config.sigma}, {"x0", config.x0}};
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  nlohmann::json snapshots = nlohmann::json::array();
  for (std::size_t s = 0; s < config.times.size(); ++s) {
    const double t = config.times[s];
    std::vector<Complex> field;
    try {
      field = evolve(*initial, *model, *alpha, t).field();
    } catch (const ConvergenceError& e) {
      err << "error: " << e.what() << '\n';
      return kNumericError;
    }

    std::ostringstream csv;
    csv << "x,re_u,im_u\n";
    double max_imag = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
      write_csv_row(csv, {grid->x(i), field[i].real(), field[i].imag()});
      max_imag = std::max(max_imag, std::abs(field[i].imag()));
    }
    std::ostringstream name;
    name << "snapshot_" << std::setw(3) << std::setfill('0') << s << ".csv";
    if (!write_file(config.output_dir / name.str(), csv.str(), err)) return kUsageError;

    const EnergyMoments m = energy_moments(*grid, field);
    snapshots.push_back({{"time", t},
                         {"file", name.str()},
                         {"centroid", m.centroid},
                         {"spread", m.spread},
                         {"energy", m.energy},
                         {"max_abs_imag", max_imag}});
    out << "t = " << format_double(t, 10) << "  centroid = " << format_double(m.centroid, 10)
        << "  -> " << (config.output_dir / name.str()).string() << '\n';
  }

  nlohmann::json meta = {
      {"library", "fracwave"},
      {"version", std::string(kVersion)},
      {"model", std::string(to_string(config.model))},
      {"c0", config.c0},
      {"mu", config.mu},
      {"alpha", config.alpha},
      {"n_points", config.n_points},
      {"length", config.length},
      {"initial_condition", ic},
      {"times", config.times},
      {"columns", {"x", "re_u", "im_u"}},
      {"field", "complex samples of u; bin j evolves with E_alpha(i kappa(-k_j) t^alpha)"},
      {"snapshots", snapshots},
  };
  if (!write_file(config.output_dir / "metadata.json", meta.dump(2) + "\n", err)) {
    return kUsageError;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// crossings

int run_crossings(const CrossingsConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<DispersionModel> model;
  std::vector<FractionalOrder> orders;
  try {
    model.emplace(config.model, config.c0, config.mu);
    for (double a : config.alphas) orders.emplace_back(a);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (orders.empty()) {
    err << "error: no alpha values given\n";
    return kUsageError;
  }

  std::ostringstream csv;
  csv << "alpha,status,k_star,residual\n";
  out << std::left << std::setw(12) << "alpha" << std::setw(28) << "status" << std::setw(22)
      << "k_star"
      << "residual\n";
  bool any = false;
  for (FractionalOrder a : orders) {
    std::string status;
    double k_star = std::nan("");
    double residual = std::nan("");
    try {
      const CrossingResult r = find_velocity_crossing(*model, a, config.bracket, config.tol);
      status = "ok";
      k_star = r.k_star;
      residual = r.residual;
      any = true;
    } catch (const DegenerateCrossing&) {
      status = "degenerate:purely-imaginary";
    } catch (const NoSignChange&) {
      status = "no-sign-change";
    } catch (const DomainError&) {
      status = "domain-error";
    } catch (const ConvergenceError& e) {
      status = "not-converged";
      residual = e.error_estimate();
    }
    out << std::left << std::setw(12) << format_double(a.value(), 8) << std::setw(28) << status
        << std::setw(22) << (std::isnan(k_star) ? "-" : format_double(k_star, 15))
        << (std::isnan(residual) ? "-" : format_double(residual, 3)) << '\n';
    csv << format_double(a.value()) << ',' << status << ','
        << (std::isnan(k_star) ? "" : format_double(k_star)) << ','
        << (std::isnan(residual) ? "" : format_double(residual)) << '\n';
  }
  if (config.csv_path) {
    if (!write_file(*config.csv_path, csv.str(), err)) return kUsageError;
  }
  return any ? kSuccess : kNumericError;
}

// ---------------------------------------------------------------------------
// ml-eval, orders

int run_ml_eval(double alpha, double z_re, double z_im, std::ostream& out, std::ostream& err) {
  try {
    const FractionalOrder a(alpha);
    const MLResult r = mittag_leffler_eval(a, {z_re, z_im});
    out << format_complex(r.value, 15) << '\n'
        << "error estimate " << format_double(r.error_estimate, 3) << " (" << to_string(r.regime)
        << ")\n";
    return kSuccess;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (estimate " << e.error_estimate() << ")\n";
    return kNumericError;
  }
}

int run_orders(int m_max, std::ostream& out, std::ostream& err) {
  if (m_max < 0) {
    err << "error: m_max must be non-negative\n";
    return kUsageError;
  }
  out << "m,alpha\n";
  const std::vector<double> orders = purely_imaginary_orders(m_max);
  for (std::size_t m = 0; m < orders.size(); ++m) {
    out << m << ',' << format_double(orders[m]) << '\n';
  }
  return kSuccess;
}

}  // namespace fracwave::cli
