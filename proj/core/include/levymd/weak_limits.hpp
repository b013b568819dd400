#pragma once

#include <span>
#include <utility>
#include <vector>

#include "levymd/cumulants.hpp"
#include "levymd/processes.hpp"
#include "levymd/random.hpp"

namespace levymd {

// Scaling exponent of the weak limit: the process is scaled by
// t^(alpha - 1) with alpha = 1 - nu/2 in the centered branch and 1 - nu in
// the mean branch; alpha always lies in (0, 1).
[[nodiscard]] double scaling_exponent(bool mean_zero, double nu);

// Which clock terms survive in the limit for a component of index nu_i
// against the shared index nu_0: {component clock active, shared clock
// active}.  Exactly one is active unless nu_0 == nu_i, when both are.
[[nodiscard]] std::pair<bool, bool> clock_indicators(double nu0, double nui);

struct LimitSample {
    std::vector<double> values;
    bool mean_zero;
    int condition;
};

// ==== Condition 1 limits =====================================================
//
// Centered branch: X_i = sqrt(c_i kappa_i'' L_i) Z_i + sqrt(c_0 kappa_i'' L_0) W_i
// with the gated clock terms above, L's at time 1 and independent standard
// normals Z, W.  Mean branch: X_i = c_i m_i L_i + c_0 m_i L_0 (gated).
// The MGF is the matching product of Mittag-Leffler factors.

[[nodiscard]] LimitSample sample_limit_cond1(const Condition1Config& cfg, const MeanVector& m,
                                             RandomStream& rng);
[[nodiscard]] double limit_mgf_cond1(const Condition1Config& cfg, const MeanVector& m,
                                     std::span<const double> theta);

// ==== Condition 2 limits =====================================================

[[nodiscard]] LimitSample sample_limit_cond2(const Condition2Config& cfg, const MeanVector& m,
                                             RandomStream& rng);
[[nodiscard]] double limit_mgf_cond2(const Condition2Config& cfg, const MeanVector& m,
                                     std::span<const double> theta);

}  // namespace levymd
