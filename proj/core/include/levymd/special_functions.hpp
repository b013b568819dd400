#pragma once

namespace levymd {

// log Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 coefficients),
// relative accuracy better than 1e-13 over the range used here.
[[nodiscard]] double lgamma_pos(double x);

// Gamma(x) for x > 0.  Overflows to +inf past x ~ 171.62.
[[nodiscard]] double gamma_pos(double x);

// 1 / Gamma(x) for any real x.  Exactly 0 at the poles x = 0, -1, -2, ...
[[nodiscard]] double rgamma(double x);

}  // namespace levymd
