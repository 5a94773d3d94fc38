#include "quad_gamma.hpp"

#include <array>

namespace fracwave::detail {
namespace {

struct Ratio {
  double num;
  double den;
};

// B_{2k}, k = 1..15
constexpr std::array<Ratio, 15> kBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

constexpr double kShiftTarget = 40.0;

}  // namespace

quad log_gamma_quad(quad x) {
  quad shift_log = 0;
  if (x < kShiftTarget) {
    quad product = 1;
    while (x < kShiftTarget) {
      product *= x;
      x += 1;
    }
    shift_log = logq(product);
  }

  const quad half_log_two_pi = logq(2 * M_PIq) / 2;
  quad result = (x - quad(0.5)) * logq(x) - x + half_log_two_pi;
  const quad inv_x2 = 1 / (x * x);
  quad x_power = 1 / x;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const quad b = quad(kBernoulli[k - 1].num) / quad(kBernoulli[k - 1].den);
    const quad two_k = quad(2.0 * static_cast<double>(k));
    result += b / (two_k * (two_k - 1)) * x_power;
    x_power *= inv_x2;
  }
  return result - shift_log;
}

}  // namespace fracwave::detail
