#include "levymd/cumulants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace levymd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CumulantModel::CumulantModel(Kind kind, double p0, double p1, std::string name)
    : kind_(kind), p0_(p0), p1_(p1), name_(std::move(name)) {}

CumulantModel CumulantModel::brownian_drift(double mu, double sigma2) {
    if (!(sigma2 >= 0.0)) throw std::domain_error("brownian_drift: sigma2 must be >= 0");
    return {Kind::BrownianDrift, mu, sigma2, "brownian"};
}

CumulantModel CumulantModel::poisson(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("poisson: lambda must be > 0");
    return {Kind::Poisson, lambda, 0.0, "poisson"};
}

CumulantModel CumulantModel::compound_poisson_exp(double lambda, double beta) {
    if (!(lambda > 0.0) || !(beta > 0.0)) {
        throw std::domain_error("compound_poisson_exp: lambda and beta must be > 0");
    }
    return {Kind::CompoundPoissonExp, lambda, beta, "compound-poisson-exp"};
}

CumulantModel CumulantModel::gamma_subordinator(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("gamma_subordinator: a and b must be > 0");
    }
    return {Kind::GammaSubordinator, a, b, "gamma"};
}

CumulantModel CumulantModel::deterministic(double mu) {
    return {Kind::Deterministic, mu, 0.0, "deterministic"};
}

double CumulantModel::kappa(double theta) const {
    switch (kind_) {
        case Kind::BrownianDrift:
            return p0_ * theta + 0.5 * p1_ * theta * theta;
        case Kind::Poisson:
            return p0_ * std::expm1(theta);
        case Kind::CompoundPoissonExp:
            // lambda theta / (beta - theta); pole at theta = beta.
            return theta < p1_ ? p0_ * theta / (p1_ - theta) : kInf;
        case Kind::GammaSubordinator:
            return theta < p1_ ? -p0_ * std::log1p(-theta / p1_) : kInf;
        case Kind::Deterministic:
            return p0_ * theta;
    }
    return kInf;
}

double CumulantModel::mean_rate() const {
    switch (kind_) {
        case Kind::BrownianDrift: return p0_;
        case Kind::Poisson: return p0_;
        case Kind::CompoundPoissonExp: return p0_ / p1_;
        case Kind::GammaSubordinator: return p0_ / p1_;
        case Kind::Deterministic: return p0_;
    }
    return 0.0;
}

double CumulantModel::curvature() const {
    switch (kind_) {
        case Kind::BrownianDrift: return p1_;
        case Kind::Poisson: return p0_;
        case Kind::CompoundPoissonExp: return 2.0 * p0_ / (p1_ * p1_);
        case Kind::GammaSubordinator: return p0_ / (p1_ * p1_);
        case Kind::Deterministic: return 0.0;
    }
    return 0.0;
}

ThetaDomain CumulantModel::domain() const {
    switch (kind_) {
        case Kind::CompoundPoissonExp:
        case Kind::GammaSubordinator:
            return {-kInf, p1_};
        default:
            return {-kInf, kInf};
    }
}

double CumulantModel::sample(double tau, RandomStream& rng) const {
    if (!(tau >= 0.0)) throw std::domain_error("sample: tau must be >= 0");
    if (tau == 0.0) return 0.0;
    switch (kind_) {
        case Kind::BrownianDrift:
            return p0_ * tau + std::sqrt(p1_ * tau) * rng.normal();
        case Kind::Poisson:
            return static_cast<double>(rng.poisson(p0_ * tau));
        case Kind::CompoundPoissonExp: {
            // Poisson number of Exp(beta) jumps; their sum is Gamma(count, 1/beta).
            const std::uint64_t count = rng.poisson(p0_ * tau);
            return count == 0 ? 0.0 : rng.gamma(static_cast<double>(count), 1.0 / p1_);
        }
        case Kind::GammaSubordinator:
            return rng.gamma(p0_ * tau, 1.0 / p1_);
        case Kind::Deterministic:
            return p0_ * tau;
    }
    return 0.0;
}

MeanVector mean_vector(std::span<const CumulantModel> components) {
    MeanVector m;
    m.values.reserve(components.size());
    m.is_zero = true;
    for (const auto& c : components) {
        const double v = c.mean_rate();
        m.values.push_back(v);
        if (v != 0.0) m.is_zero = false;
    }
    return m;
}

}  // namespace levymd
