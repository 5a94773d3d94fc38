#pragma once

// Adaptive Gauss-Legendre quadrature for complex-valued integrands. Each
// panel is scored by comparing one 20-point rule against two on its halves;
// the worst panel is bisected until the summed estimate meets the target.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace fracwave::detail {

struct GaussRule {
  static constexpr std::size_t kPoints = 20;
  std::array<double, kPoints> nodes{};
  std::array<double, kPoints> weights{};
};

inline const GaussRule& gauss_legendre_20() {
  static const GaussRule rule = [] {
    GaussRule r;
    constexpr std::size_t n = GaussRule::kPoints;
    for (std::size_t i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(n) + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t j = 2; j <= n; ++j) {
          const double jd = static_cast<double>(j);
          const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-17) break;
      }
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;
  double l1 = 0.0;  // integral of |f|, bounds achievable rounding
  bool converged = false;
};

template <class F>
QuadratureResult integrate_adaptive(F&& f, std::span<const double> breakpoints, double rel_tol,
                                    double abs_tol = 0.0, std::size_t max_panels = 4000) {
  struct Panel {
    double a;
    double b;
    std::complex<double> value;
    double error;
    double l1;
  };
  const GaussRule& rule = gauss_legendre_20();

  auto apply = [&](double a, double b, double& l1) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::complex<double> sum{};
    l1 = 0.0;
    for (std::size_t i = 0; i < GaussRule::kPoints; ++i) {
      const std::complex<double> v = f(mid + half * rule.nodes[i]);
      sum += rule.weights[i] * v;
      l1 += rule.weights[i] * std::abs(v);
    }
    l1 *= std::abs(half);
    return sum * half;
  };
  auto score = [&](double a, double b) {
    double l1_coarse = 0.0;
    double l1_left = 0.0;
    double l1_right = 0.0;
    const double m = 0.5 * (a + b);
    const std::complex<double> coarse = apply(a, b, l1_coarse);
    const std::complex<double> fine = apply(a, m, l1_left) + apply(m, b, l1_right);
    return Panel{a, b, fine, std::abs(fine - coarse), l1_left + l1_right};
  };

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) {
      panels.push_back(score(breakpoints[i], breakpoints[i + 1]));
    }
  }

  QuadratureResult out;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (true) {
    std::complex<double> total{};
    double error = 0.0;
    double l1 = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      error += p.error;
      l1 += p.l1;
    }
    out.value = total;
    out.error = error;
    out.l1 = l1;
    const double target = std::max({rel_tol * std::abs(total), 8.0 * eps * l1, abs_tol});
    if (error <= target) {
      out.converged = true;
      return out;
    }
    if (panels.size() >= max_panels) return out;

    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& x, const Panel& y) { return x.error < y.error; });
    const double a = worst->a;
    const double b = worst->b;
    const double m = 0.5 * (a + b);
    if (!(m > a && m < b)) {
      // panel cannot be split further in double precision
      out.converged = false;
      return out;
    }
    *worst = score(a, m);
    panels.push_back(score(m, b));
  }
}

}  // namespace fracwave::detail
