// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run everything
//   acceptance --criterion N   run criterion N only (exit status reflects it)

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fracwave/analysis.hpp"
#include "fracwave/dispersion.hpp"
#include "fracwave/mittag_leffler.hpp"
#include "fracwave/spectral.hpp"
#include "oracles/oracles.hpp"

namespace fs = std::filesystem;
using namespace fracwave;

namespace {

constexpr double kPi = std::numbers::pi;
const std::array<double, 6> kOrders{0.3, 0.4, 0.5, 0.75, 0.9, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

const DispersionModel& model_for(int which) {
  static const DispersionModel kin = DispersionModel::kinematic();
  static const DispersionModel kdv = DispersionModel::kdv();
  return which == 0 ? kin : kdv;
}

const char* model_name(int which) { return which == 0 ? "kinematic" : "kdv"; }

// n points inside the default figure ranges: (0.01, 2] kinematic, (0.05, 0.95) KdV
std::vector<double> sweep_points(int which, int n) {
  std::vector<double> k(n);
  const double lo = which == 0 ? 0.01 : 0.05;
  const double hi = which == 0 ? 2.0 : 0.95;
  for (int i = 0; i < n; ++i) k[i] = lo + (hi - lo) * (i + 0.5) / n;
  return k;
}

// ---------------------------------------------------------------------------

Outcome defining_relation() {
  Outcome out;
  std::ostringstream failures;
  for (double a : kOrders) {
    double worst = 0.0;
    for (int which : {0, 1}) {
      const DispersionModel& model = model_for(which);
      // 50 wave numbers with kappa > 0
      for (int i = 1; i <= 50; ++i) {
        const double k = 0.019 * i;
        const double kappa = spatial_symbol(model, k);
        const Complex w = omega_bar(model, FractionalOrder(a), k);
        const Complex lhs = std::pow(Complex(0.0, 1.0) * w, a);
        worst = std::max(worst, std::abs(lhs - Complex(0.0, kappa)) / std::abs(kappa));
      }
    }
    if (worst > 1e-12) {
      out.pass = false;
      failures << " alpha=" << a << ":" << sci(worst);
    }
  }
  out.detail = out.pass ? "|(i w)^a - i kappa|/|kappa| <= 1e-12 for all orders"
                        : "exceeds 1e-12 at" + failures.str();
  return out;
}

Outcome classical_limits() {
  const FractionalOrder one(1.0);
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double k = 2.0 * i / 400.0;
    const Complex want_kin{1.0, 0.0};
    const Complex want_vp{1.0 - k * k, 0.0};
    const Complex want_vg{1.0 - 3.0 * k * k, 0.0};
    worst = std::max(worst, std::abs(group_velocity(model_for(0), one, k) - want_kin));
    worst = std::max(worst, std::abs(phase_velocity(model_for(1), one, k) - want_vp) /
                                std::max(1.0, std::abs(want_vp)));
    worst = std::max(worst, std::abs(group_velocity(model_for(1), one, k) - want_vg) /
                                std::max(1.0, std::abs(want_vg)));
    if (k > 0.0) {
      worst = std::max(worst, std::abs(phase_velocity(model_for(0), one, k) - want_kin));
    }
  }
  return {worst <= 1e-14, "max deviation " + sci(worst) + " over k in [0, 2]"};
}

Outcome cartesian_split() {
  double worst = 0.0;
  for (double a : kOrders) {
    const FractionalOrder alpha(a);
    const double c = std::cos((1.0 / a - 1.0) * kPi / 2.0);
    const double s = std::sin((1.0 / a - 1.0) * kPi / 2.0);
    for (int which : {0, 1}) {
      for (double k : sweep_points(which, 200)) {
        double p = 0.0;
        double g = 0.0;
        if (which == 0) {
          p = std::pow(k, -1.0 + 1.0 / a);
          g = p / a;
        } else {
          p = std::pow(std::pow(k, 1.0 - a) - std::pow(k, 3.0 - a), 1.0 / a);
          g = std::pow(k - k * k * k, -1.0 + 1.0 / a) * (1.0 - 3.0 * k * k) / a;
        }
        const Complex vp = phase_velocity(model_for(which), alpha, k);
        const Complex vg = group_velocity(model_for(which), alpha, k);
        // relative to the magnitude, so a vanishing cosine does not divide by zero
        worst = std::max({worst, std::abs(vp.real() - c * p) / std::abs(vp),
                          std::abs(vp.imag() - s * p) / std::abs(vp),
                          std::abs(vg.real() - c * g) / std::abs(vg),
                          std::abs(vg.imag() - s * g) / std::abs(vg)});
      }
    }
  }
  return {worst <= 1e-13, "max relative deviation " + sci(worst)};
}

Outcome purely_imaginary() {
  double worst = 0.0;
  for (double a : {0.5, 0.25, 1.0 / 6.0}) {
    for (int which : {0, 1}) {
      for (double k : sweep_points(which, 200)) {
        const DispersionPoint p = evaluate_point(model_for(which), FractionalOrder(a), k);
        worst = std::max({worst, std::abs(p.phase_velocity.real()) / std::abs(p.phase_velocity),
                          std::abs(p.group_velocity.real()) / std::abs(p.group_velocity)});
      }
    }
  }
  return {worst <= 1e-12, "max |Re v|/|v| = " + sci(worst)};
}

Outcome finite_differences() {
  double worst = 0.0;
  std::string where;
  for (double a : kOrders) {
    const FractionalOrder alpha(a);
    for (int which : {0, 1}) {
      for (double k : sweep_points(which, 100)) {
        const double h = 1e-5 * std::max(1.0, k);
        const Complex fd = (omega_bar(model_for(which), alpha, k + h) -
                            omega_bar(model_for(which), alpha, k - h)) /
                           (2.0 * h);
        const Complex vg = group_velocity(model_for(which), alpha, k);
        // componentwise, with a floor for components that vanish identically
        const double floor = 1e-12 * std::abs(vg);
        const double re = std::abs(fd.real() - vg.real()) / std::max(std::abs(vg.real()), floor);
        const double im = std::abs(fd.imag() - vg.imag()) / std::max(std::abs(vg.imag()), floor);
        if (std::max(re, im) > worst) {
          worst = std::max(re, im);
          std::ostringstream w;
          w << " (" << model_name(which) << ", alpha=" << a << ", k=" << k << ")";
          where = w.str();
        }
      }
    }
  }
  return {worst <= 1e-6, "max relative deviation " + sci(worst) + where};
}

Outcome kinematic_ratio() {
  double worst = 0.0;
  for (double a : kOrders) {
    const FractionalOrder alpha(a);
    for (double k : sweep_points(0, 200)) {
      const Complex r = group_velocity(model_for(0), alpha, k) / phase_velocity(model_for(0), alpha, k);
      worst = std::max(worst, std::abs(r - 1.0 / a) * a);
    }
  }
  return {worst <= 1e-13, "max |v_g/v_p - 1/alpha| alpha = " + sci(worst)};
}

Outcome kdv_crossing() {
  try {
    const CrossingResult c = find_velocity_crossing(model_for(1), FractionalOrder(0.75), {0.05, 0.95});
    const double dk = std::abs(c.k_star - 1.0 / 3.0);
    const Complex vg = group_velocity(model_for(1), FractionalOrder(0.75), c.k_star);
    const double dv = std::abs(c.v_common - vg);
    std::ostringstream d;
    d.precision(17);
    d << "k* = " << c.k_star << ", |k* - 1/3| = " << sci(dk) << ", |v_p - v_g| = " << sci(dv);
    return {dk <= 1e-8 && dv <= 1e-10, d.str()};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

Outcome mittag_leffler_accuracy() {
  Outcome out;
  std::ostringstream d;

  // E_1 through the generic regimes against exp
  const FractionalOrder one(1.0);
  double e1 = 0.0;
  for (int ir = 1; ir <= 20; ++ir) {
    for (int j = 0; j < 36; ++j) {
      const Complex z = std::polar(0.5 * ir, -kPi + 2.0 * kPi * j / 36.0);
      const Complex want = std::exp(z);
      e1 = std::max({e1, std::abs(mittag_leffler_series(one, z).value - want) / std::abs(want),
                     std::abs(mittag_leffler_contour(one, z).value - want) / std::abs(want),
                     std::abs(mittag_leffler(one, z) - want) / std::abs(want)});
    }
  }
  d << "E_1 vs exp " << sci(e1);
  out.pass = out.pass && e1 <= 1e-10;

  // E_{1/2}(-1)
  const Complex half = mittag_leffler(FractionalOrder(0.5), {-1.0, 0.0});
  const Complex oracle = fracwave::oracle::ml_series_long_double(0.5, {-1.0, 0.0});
  const double dh = std::max(std::abs(half.real() - 0.4275836), std::abs(half - oracle));
  d.precision(10);
  d << "; E_1/2(-1) = " << half.real() << " (dev " << sci(dh) << ")";
  out.pass = out.pass && dh <= 1e-7;

  // every pair of regimes that claims the accuracy goal must agree
  double overlap = 0.0;
  int pairs = 0;
  for (double a : {0.5, 0.6, 0.75, 0.9}) {
    for (double r = 4.0; r <= 6.0; r += 0.25) {
      for (int j = 0; j < 72; ++j) {
        const Complex z = std::polar(r, -kPi + 2.0 * kPi * (j + 0.5) / 72.0);
        const FractionalOrder alpha(a);
        std::vector<MLResult> ok;
        try {
          for (const MLResult& res : {mittag_leffler_series(alpha, z), mittag_leffler_asymptotic(alpha, z),
                                      mittag_leffler_contour(alpha, z)}) {
            if (res.error_estimate <= MLParams{}.accuracy_goal) ok.push_back(res);
          }
        } catch (const std::exception&) {
          continue;  // overflow near the positive real axis
        }
        for (std::size_t p = 0; p < ok.size(); ++p) {
          for (std::size_t q = p + 1; q < ok.size(); ++q) {
            overlap = std::max(overlap, std::abs(ok[p].value - ok[q].value) / std::abs(ok[q].value));
            ++pairs;
          }
        }
      }
    }
  }
  d << "; regime overlap " << sci(overlap) << " over " << pairs << " pairs";
  out.pass = out.pass && overlap <= 1e-8 && pairs > 0;
  out.detail = d.str();
  return out;
}

Outcome spectral_classical() {
  Outcome out;
  std::ostringstream d;
  const FractionalOrder one(1.0);

  // advection on N = 256
  const PeriodicGrid grid(256, 2.0 * kPi);
  auto u0 = [](double x) { return std::exp(std::sin(x)) + 0.5 * std::cos(3.0 * x); };
  std::vector<double> samples(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = u0(grid.x(i));
  const SpectralState s0 = SpectralState::from_real_samples(grid, samples);
  double adv = 0.0;
  for (double t : {0.5, 3.0, 40.0}) {
    const auto field = evolve(s0, model_for(0), one, t).field();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      adv = std::max(adv, std::abs(field[i] - u0(grid.x(i) - t)));
    }
  }
  d << "advection " << sci(adv);
  out.pass = out.pass && adv <= 1e-10;

  // KdV packet centroid
  const PacketExperiment e;
  const double v = centroid_velocity(model_for(1), one, e, 0.0, 100.0);
  const double vg = 1.0 - 3.0 * e.k0 * e.k0;
  const double rel = std::abs(v - vg) / vg;
  d.precision(8);
  d << "; centroid speed " << v << " vs " << vg << " (" << 100.0 * rel << "%)";
  out.pass = out.pass && rel <= 0.02;

  // L2 drift
  const SpectralState p0 = wavepacket(e.grid, e.k0, e.sigma, e.x0);
  auto norm = [](const std::vector<Complex>& u) {
    double s = 0.0;
    for (const Complex& c : u) s += std::norm(c);
    return std::sqrt(s);
  };
  const double n0 = norm(p0.field());
  double drift = 0.0;
  for (int step = 1; step <= 10; ++step) {
    drift = std::max(drift, std::abs(norm(evolve(p0, model_for(1), one, 10.0 * step).field()) - n0) / n0);
  }
  d << "; L2 drift " << sci(drift);
  out.pass = out.pass && drift <= 1e-10;
  out.detail = d.str();
  return out;
}

Outcome fractional_propagator() {
  // graded mesh t_n = (n / N)^3 resolves the t^alpha behaviour at the start
  const auto sol = fracwave::oracle::l1_caputo_linear(0.5, {0.0, 1.0}, 1.0, 4000, 3.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < sol.t.size(); ++i) {
    worst = std::max(worst, std::abs(propagator_for_symbol(FractionalOrder(0.5), 1.0, sol.t[i]) - sol.y[i]));
  }
  return {worst <= 1e-4, "max |E - L1| over t in [0, 1] = " + sci(worst) + " (4001 mesh points)"};
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / "fracwave_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string exe = FRACWAVE_CLI_PATH;
  const std::array<std::pair<const char*, const char*>, 4> figures{{
      {"fig1", "--model kinematic --alpha 0.75 --kmin 0.01 --kmax 2 --n 200"},
      {"fig2", "--model kinematic --alpha 0.5 --kmin 0.01 --kmax 2 --n 200"},
      {"fig3", "--model kdv --alpha 1 --kmin 0 --kmax 2 --n 100"},
      {"fig4", "--model kdv --alpha 0.5 --kmin 0.05 --kmax 0.95 --n 100"},
  }};
  Outcome out;
  std::ostringstream d;
  int identical = 0;
  for (const auto& [name, args] : figures) {
    for (const char* suffix : {"", "_rerun"}) {
      const fs::path target = dir / (std::string(name) + suffix + ".csv");
      const std::string cmd = "\"" + exe + "\" sweep " + args + " --format both -o \"" +
                              target.string() + "\" > /dev/null";
      if (run_command(cmd) != 0) {
        return {false, std::string("sweep failed for ") + name};
      }
    }
    const std::string base = (dir / name).string();
    const bool same = slurp(base + ".csv") == slurp(base + "_rerun.csv") &&
                      slurp(base + ".svg") == slurp(base + "_rerun.svg") &&
                      !slurp(base + ".csv").empty();
    identical += same;
    out.pass = out.pass && same;
  }
  d << identical << "/4 sweeps byte-identical on rerun";

  const std::string check = "\"" + std::string(FRACWAVE_PYTHON) + "\" \"" +
                            std::string(FRACWAVE_FIGURE_CHECKER) + "\" \"" + dir.string() +
                            "\" > \"" + (dir / "check.log").string() + "\" 2>&1";
  const int rc = run_command(check);
  d << "; external CSV check " << (rc == 0 ? "passed" : "failed");
  if (rc != 0) d << ":\n" << slurp(dir / "check.log");
  out.pass = out.pass && rc == 0;
  out.detail = d.str();
  fs::remove_all(dir);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "defining relation", defining_relation},
      {2, "classical limits", classical_limits},
      {3, "cartesian split", cartesian_split},
      {4, "purely imaginary orders", purely_imaginary},
      {5, "group velocity vs finite differences", finite_differences},
      {6, "kinematic constant ratio", kinematic_ratio},
      {7, "KdV crossing", kdv_crossing},
      {8, "Mittag-Leffler accuracy", mittag_leffler_accuracy},
      {9, "spectral solver at alpha = 1", spectral_classical},
      {10, "fractional propagator vs L1 scheme", fractional_propagator},
      {11, "CLI determinism and format", cli_determinism},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  int failed = 0;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%2d] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
