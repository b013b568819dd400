#pragma once

#include "levymd/mittag_leffler.hpp"
#include "levymd/random.hpp"

namespace levymd {

// Stability index of a positive stable subordinator; strictly inside (0, 1).
struct StableIndex {
    explicit StableIndex(double n);
    double value;
    [[nodiscard]] MLOrder ml_order() const { return MLOrder{value}; }
};

// Draw S with Laplace transform E exp(-lambda S) = exp(-lambda^nu)
// (the unit-time marginal of the stable subordinator).  Kanter's
// representation from a Uniform(0, pi) and an Exp(1) draw, evaluated in log
// space so extreme tail draws degrade to +inf rather than NaN.
[[nodiscard]] double sample_stable_unit(StableIndex nu, RandomStream& rng);

// Draw the inverse stable subordinator L_nu(t) = inf{s : S_nu(s) > t} at a
// fixed time, via the marginal identity L_nu(t) =d (t / S_nu(1))^nu.
[[nodiscard]] double sample_inverse_stable(StableIndex nu, double t, RandomStream& rng);

// Exact moment generating function E exp(theta L_nu(t)) = E_nu(theta t^nu),
// valid for every real theta.
[[nodiscard]] double inverse_stable_mgf(StableIndex nu, double theta, double t);

}  // namespace levymd
