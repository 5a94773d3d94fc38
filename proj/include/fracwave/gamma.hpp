#pragma once

namespace fracwave {

/// Gamma function via the Lanczos approximation (g = 7, nine terms) with
/// reflection below 1/2. Relative error is a few 1e-15 up to x ~ 170.
double gamma(double x);

/// log|Gamma(x)| for x not a non-positive integer.
double log_gamma(double x);

/// 1/Gamma(x); exactly zero at non-positive integers.
double reciprocal_gamma(double x);

/// sin(pi x) with the argument reduced before scaling; exact zeros at integers.
double sin_pi(double x);

}  // namespace fracwave
