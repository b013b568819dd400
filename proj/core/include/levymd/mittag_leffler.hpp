#pragma once

namespace levymd {

// Order parameter of the one-parameter Mittag-Leffler function E_alpha.
// alpha = 1 is admitted (E_1 = exp); everything else requires alpha in (0, 1).
struct MLOrder {
    explicit MLOrder(double a);
    double value;
};

// ==== evaluation =============================================================
//
// E_alpha(x) = sum_k x^k / Gamma(alpha k + 1) on the whole real line.
// For x >= 0 branch selection is driven by s = x^(1/alpha):
//   s <= kMlBlendLo           power series (Kahan-compensated)
//   s >= kMlBlendHi           exponential asymptotic branch
//   in between                linear blend of the two branches
// The two positive branches agree far better than the blend window is wide,
// so the blend only serves to make the switch continuous.
//
// For x < 0 the alternating series cancels catastrophically long before the
// asymptotic branch becomes accurate, so past x = -kMlNegativeSwitch the
// value comes from the complete-monotonicity spectral integral instead,
// which has a positive integrand and is uniformly accurate on the whole
// negative axis.

inline constexpr double kMlCrossover = 30.0;
inline constexpr double kMlBlendLo = 27.0;
inline constexpr double kMlBlendHi = 33.0;
inline constexpr double kMlNegativeSwitch = 1.0;

// E_alpha(x).  Throws std::domain_error for non-finite x, and for x so large
// that the result overflows a double (use mittag_leffler_log there).
[[nodiscard]] double mittag_leffler(MLOrder order, double x);

// log E_alpha(x), finite for every finite x.  Coincides with
// log(mittag_leffler(...)) wherever the latter is representable.
[[nodiscard]] double mittag_leffler_log(MLOrder order, double x);

// Scaled log-limit kernel: lim_{x->inf} (1/x) log E_alpha(y x^alpha),
// i.e. y^(1/alpha) for y >= 0 and 0 for y < 0.
[[nodiscard]] double ml_log_limit_kernel(MLOrder order, double y);

namespace detail {
// Branch internals, exposed so tests can measure cross-branch agreement.
[[nodiscard]] double ml_series(double alpha, double x);
[[nodiscard]] double ml_asymptotic_log_pos(double alpha, double x);
[[nodiscard]] double ml_asymptotic_neg(double alpha, double x);
[[nodiscard]] double ml_spectral_neg(double alpha, double x);
}  // namespace detail

}  // namespace levymd
