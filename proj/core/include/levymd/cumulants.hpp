#pragma once

#include <span>
#include <string>
#include <vector>

#include "levymd/random.hpp"

namespace levymd {

// Open effective domain of a cumulant generating function; kappa is finite on
// (lo, hi) and +inf outside.
struct ThetaDomain {
    double lo;
    double hi;
    [[nodiscard]] bool contains(double theta) const { return theta > lo && theta < hi; }
};

// One-dimensional Levy component, described by its cumulant generating
// function kappa(theta) = log E exp(theta S(1)).  Every model satisfies
// kappa(0) = 0, kappa convex, kappa'(0) = mean_rate, kappa''(0) >= 0.
class CumulantModel {
  public:
    enum class Kind { BrownianDrift, Poisson, CompoundPoissonExp, GammaSubordinator, Deterministic };

    static CumulantModel brownian_drift(double mu, double sigma2);
    static CumulantModel poisson(double lambda);
    static CumulantModel compound_poisson_exp(double lambda, double beta);
    static CumulantModel gamma_subordinator(double a, double b);
    static CumulantModel deterministic(double mu);

    // kappa(theta); +inf outside the effective domain.
    [[nodiscard]] double kappa(double theta) const;
    // kappa'(0): mean of S(1).
    [[nodiscard]] double mean_rate() const;
    // kappa''(0): variance of S(1).
    [[nodiscard]] double curvature() const;
    [[nodiscard]] ThetaDomain domain() const;
    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const std::string& name() const { return name_; }

    // Draw S(tau) for tau >= 0 (the process evaluated at operational time tau).
    [[nodiscard]] double sample(double tau, RandomStream& rng) const;

  private:
    CumulantModel(Kind kind, double p0, double p1, std::string name);

    Kind kind_;
    double p0_;
    double p1_;
    std::string name_;
};

// Vector of component means kappa_i'(0); is_zero distinguishes the two
// branches of every scaled-limit statement.
struct MeanVector {
    std::vector<double> values;
    bool is_zero;
};

[[nodiscard]] MeanVector mean_vector(std::span<const CumulantModel> components);

}  // namespace levymd
