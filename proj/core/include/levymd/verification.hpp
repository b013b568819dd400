#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "levymd/processes.hpp"
#include "levymd/rate_functions.hpp"
#include "levymd/stats.hpp"
#include "levymd/weak_limits.hpp"

namespace levymd {

// ==== scaling family =========================================================

// Moderate-deviation scaling a(t) = t^(-gamma) with gamma in (0, 1), so that
// a(t) -> 0 while t a(t) -> infinity.
struct ScalingFamily {
    explicit ScalingFamily(double g);
    double gamma;
    [[nodiscard]] double a(double t) const;
};

// Closed axis-aligned half-space {x : x[axis] >= bound} (upper) or
// {x : x[axis] <= bound} (lower).
struct HalfSpace {
    std::size_t axis = 0;
    double bound = 0.0;
    bool upper = true;

    [[nodiscard]] bool contains(std::span<const double> x) const;
    [[nodiscard]] bool contains_origin() const;
};

// Infimum of a convex rate with rate(0) = 0 over the half-space.  Zero when
// the origin belongs to the set; otherwise convexity pins the infimum onto
// the boundary hyperplane, where the free coordinates are minimized by
// cyclic golden-section descent.
[[nodiscard]] double half_space_infimum(
    const std::function<double(std::span<const double>)>& rate, std::size_t dim,
    const HalfSpace& set);

// ==== scaled samples =========================================================
//
// Moderate scaling multiplies component i of X(t)/t by (t a(t))^alpha_i with
// alpha_i = scaling_exponent(m.is_zero, nu*) and nu* the larger of the two
// clock indices feeding that component.  Weak scaling multiplies X_i(t) by
// t^(alpha_i - 1).

[[nodiscard]] std::vector<double> scaled_md_sample_cond1(const Condition1Config& cfg,
                                                         const MeanVector& m,
                                                         const ScalingFamily& scale, double t,
                                                         RandomStream& rng);
[[nodiscard]] std::vector<double> scaled_md_sample_cond2(const Condition2Config& cfg,
                                                         const MeanVector& m,
                                                         const ScalingFamily& scale, double t,
                                                         RandomStream& rng);
[[nodiscard]] std::vector<double> scaled_weak_sample_cond1(const Condition1Config& cfg,
                                                           const MeanVector& m, double t,
                                                           RandomStream& rng);
[[nodiscard]] std::vector<double> scaled_weak_sample_cond2(const Condition2Config& cfg,
                                                           const MeanVector& m, double t,
                                                           RandomStream& rng);

// ==== rare-event diagnostics =================================================

struct RareEventPoint {
    double t;
    double estimate;  // -w(t) log(hits/n); +inf when hits == 0
    double se;        // delta-method error w(t) sqrt((1-p)/(p n)); +inf when hits == 0
    std::size_t hits;
};

struct MdDiagnostic {
    std::vector<RareEventPoint> points;
    double target;  // inf of the limiting rate over the set
    HalfSpace set;
    double gamma;  // scaling exponent; 0 marks the large-deviation speed t
    std::size_t n;
};

// Theoretical targets: infimum over the set of the limiting rate function.
// Moderate targets use the explicit separable / single-clock forms whenever
// the index ordering admits one, otherwise the numeric conjugate; the
// large-deviation targets always conjugate numerically.
[[nodiscard]] double md_target_cond1(const Condition1Config& cfg, const MeanVector& m,
                                     const HalfSpace& set);
[[nodiscard]] double md_target_cond2(const Condition2Config& cfg, const MeanVector& m,
                                     const HalfSpace& set);
[[nodiscard]] double ld_target_cond1(const Condition1Config& cfg, const HalfSpace& set);
[[nodiscard]] double ld_target_cond2(const Condition2Config& cfg, const HalfSpace& set);

// Monte Carlo estimates of the decay rate of P(scaled sample in set) along a
// time grid, with w(t) = a(t) (moderate) or 1/t (large).  Replica r at grid
// index ti draws from stream ti*n + r, so estimates depend only on
// (seed, n, t_grid), never on the thread count.
[[nodiscard]] MdDiagnostic estimate_md_rate_cond1(const Condition1Config& cfg,
                                                  const MeanVector& m, const ScalingFamily& scale,
                                                  std::span<const double> t_grid, std::size_t n,
                                                  const HalfSpace& set, std::uint64_t seed,
                                                  unsigned threads);
[[nodiscard]] MdDiagnostic estimate_md_rate_cond2(const Condition2Config& cfg,
                                                  const MeanVector& m, const ScalingFamily& scale,
                                                  std::span<const double> t_grid, std::size_t n,
                                                  const HalfSpace& set, std::uint64_t seed,
                                                  unsigned threads);
[[nodiscard]] MdDiagnostic estimate_ld_rate_cond1(const Condition1Config& cfg,
                                                  std::span<const double> t_grid, std::size_t n,
                                                  const HalfSpace& set, std::uint64_t seed,
                                                  unsigned threads);
[[nodiscard]] MdDiagnostic estimate_ld_rate_cond2(const Condition2Config& cfg,
                                                  std::span<const double> t_grid, std::size_t n,
                                                  const HalfSpace& set, std::uint64_t seed,
                                                  unsigned threads);

// ==== weak-convergence diagnostics ===========================================

struct WeakDiagnostic {
    double t;
    std::vector<double> ks;  // per-component two-sample KS distance
    double ks_threshold;     // asymptotic critical value at 1% significance
    std::size_t n;
};

// Two-sample comparison between the scaled process at time t (streams
// 0..n-1) and the limit sampler (streams n..2n-1).
[[nodiscard]] WeakDiagnostic weak_limit_ks_cond1(const Condition1Config& cfg, const MeanVector& m,
                                                 double t, std::size_t n, std::uint64_t seed,
                                                 unsigned threads);
[[nodiscard]] WeakDiagnostic weak_limit_ks_cond2(const Condition2Config& cfg, const MeanVector& m,
                                                 double t, std::size_t n, std::uint64_t seed,
                                                 unsigned threads);

// Monte Carlo MGF of the limit sampler at theta, for comparison against the
// exact product-of-Mittag-Leffler formula.
[[nodiscard]] McEstimate mc_limit_mgf_cond1(const Condition1Config& cfg, const MeanVector& m,
                                            std::span<const double> theta, std::size_t n,
                                            std::uint64_t seed, unsigned threads);
[[nodiscard]] McEstimate mc_limit_mgf_cond2(const Condition2Config& cfg, const MeanVector& m,
                                            std::span<const double> theta, std::size_t n,
                                            std::uint64_t seed, unsigned threads);

}  // namespace levymd
