#pragma once

// log Gamma in binary128 for the Taylor regime of the Mittag-Leffler series.
// Upward recurrence to x >= 40 followed by the Stirling series through B_30.

#include <quadmath.h>

namespace fracwave::detail {

using quad = __float128;

/// log Gamma(x) for x > 0.
quad log_gamma_quad(quad x);

}  // namespace fracwave::detail
