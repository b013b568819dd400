#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "levymd/processes.hpp"

namespace levymd {

// ==== limit cumulant generating functions ====================================
//
// Large-deviation limits (speed t):
//   psi_cond1     sum_i (c_i kappa_i(theta_i))^(1/nu_i) [kappa_i >= 0]
//                 + (c_0 sum_i kappa_i(theta_i))^(1/nu_0) [sum >= 0]
//   upsilon_cond2 sum_j (sum_i c_ij kappa_i(theta_i))^(1/nu) [sum >= 0]
// Moderate-deviation limits (speed 1/a_t) replace kappa by its mean-zero
// quadratic or mean-linear expansion at 0, gated per clock by whichever
// stability index dominates:
//   psi_tilde, upsilon_tilde (branch chosen by m.is_zero)
//
// All four are finite-convex apart from the +inf propagated when some
// kappa_i(theta_i) itself is +inf; indicators are evaluated exactly and ties
// nu_0 == nu_i activate both clock terms.

[[nodiscard]] double psi_cond1(const Condition1Config& cfg, std::span<const double> theta);
[[nodiscard]] double upsilon_cond2(const Condition2Config& cfg, std::span<const double> theta);
[[nodiscard]] double psi_tilde(const Condition1Config& cfg, const MeanVector& m,
                               std::span<const double> theta);
[[nodiscard]] double upsilon_tilde(const Condition2Config& cfg, const MeanVector& m,
                                   std::span<const double> theta);

// A limit cumulant packaged for conjugation: evaluator, dimension, and the
// per-axis effective domains that bound the search box.
struct LimitCumulant {
    enum class Kind { Psi, Upsilon, PsiTilde, UpsilonTilde };
    Kind kind;
    std::size_t dim;
    std::function<double(std::span<const double>)> eval;
    std::vector<ThetaDomain> domains;
};

[[nodiscard]] LimitCumulant make_psi(Condition1Config cfg);
[[nodiscard]] LimitCumulant make_upsilon(Condition2Config cfg);
[[nodiscard]] LimitCumulant make_psi_tilde(Condition1Config cfg, MeanVector m);
[[nodiscard]] LimitCumulant make_upsilon_tilde(Condition2Config cfg, MeanVector m);

// ==== numeric Legendre-Fenchel conjugate =====================================
//
// I(x) = sup_theta { <theta, x> - f(theta) }, computed as a coarse grid scan
// over a box followed by cyclic coordinate ascent (golden section per axis;
// the objective is concave along every axis for the cumulants above).  The
// result is a lower bound certified by the best probed theta; +inf is
// reported when the objective exceeds divergence_threshold along a probed
// ray, which happens exactly when x escapes the gradient range of f.

struct ConjugateOptions {
    std::vector<double> lo;  // per-axis box bounds; poles are inset by 1%
    std::vector<double> hi;
    int grid_points = 33;
    int refine_passes = 10;
    double theta_tol = 1e-10;
    double divergence_threshold = 1e8;

    static ConjugateOptions boxed(const LimitCumulant& f, double halfwidth = 8.0);
};

struct ConjugateResult {
    std::vector<double> x;
    double value;  // +inf when divergent
    std::optional<std::vector<double>> argmax;
    enum class Method { Grid, Ascent } method;
};

[[nodiscard]] ConjugateResult conjugate(const LimitCumulant& f, std::span<const double> x,
                                        const ConjugateOptions& opts);
[[nodiscard]] ConjugateResult conjugate_fn(
    const std::function<double(std::span<const double>)>& f, std::span<const double> x,
    const ConjugateOptions& opts);

// ==== closed forms ===========================================================
//
// One-dimensional conjugates of the two scalar kernels behind every explicit
// moderate-deviation rate:
//   theta -> (curvature theta^2 / 2)^(1/nu)   (centered branch)
//   theta -> (mean theta [mean theta >= 0])^(1/nu)   (mean branch)

[[nodiscard]] double closed_form_u(StableIndex nu, double curvature, double x);
[[nodiscard]] double closed_form_v(StableIndex nu, double mean, double x);

// Stationary points of the scalar suprema (used to cross-check the numeric
// argmax): centered branch needs x >= 0, mean branch needs mean > 0, x > 0.
[[nodiscard]] double md_optimizer_quadratic(StableIndex nu, double c, double curvature, double x);
[[nodiscard]] double md_optimizer_linear(StableIndex nu, double c, double mean, double x);

// ==== explicit moderate-deviation rates (Condition 1) ========================

// nu_0 strictly below every component index: the shared clock drops out and
// the rate separates across components.
[[nodiscard]] double md_rate_separable(const Condition1Config& cfg, const MeanVector& m,
                                       std::span<const double> x);

// Admissible cone for the single-clock regime: x_i m_i >= 0 for all i, and
// x_i = 0 wherever m_i = 0.
[[nodiscard]] bool in_admissible_cone(const MeanVector& m, std::span<const double> x);

// nu_0 strictly above every component index and m != 0: the shared clock
// dominates and the rate is the max of per-component one-dimensional rates
// on the admissible cone, +inf outside it.
[[nodiscard]] double md_rate_single_clock(const Condition1Config& cfg, const MeanVector& m,
                                          std::span<const double> x);

}  // namespace levymd
