#include "levymd/processes.hpp"

#include <stdexcept>

namespace levymd {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_nu(double nu) {
    require(nu > 0.0 && nu < 1.0, "config: every stability index must lie in (0, 1)");
}

}  // namespace

void Condition1Config::validate() const {
    const std::size_t h = components.size();
    require(h >= 1, "config: at least one component is required");
    require(c.size() == h + 1, "config: coefficient count must be h + 1");
    require(nus.size() == h + 1, "config: stability index count must be h + 1");
    for (double ci : c) require(ci > 0.0, "config: every coefficient must be positive");
    for (double nu : nus) check_nu(nu);
}

void Condition2Config::validate() const {
    const std::size_t h = components.size();
    require(h >= 1, "config: at least one component is required");
    require(weights.size() == h, "config: weight matrix must have one row per component");
    const std::size_t k = weights.front().size();
    require(k >= 1, "config: at least one clock is required");
    for (const auto& row : weights) {
        require(row.size() == k, "config: weight matrix rows must have equal length");
        for (double w : row) require(w > 0.0, "config: every coefficient must be positive");
    }
    check_nu(nu);
}

std::vector<double> draw_clocks_cond1(const Condition1Config& cfg, double t, RandomStream& rng) {
    std::vector<double> clocks;
    clocks.reserve(cfg.dim() + 1);
    for (std::size_t i = 0; i < cfg.dim() + 1; ++i) {
        clocks.push_back(sample_inverse_stable(StableIndex{cfg.nus[i]}, t, rng));
    }
    return clocks;
}

std::vector<double> sample_cond1_given_clocks(const Condition1Config& cfg,
                                              std::span<const double> clocks, RandomStream& rng) {
    std::vector<double> x;
    x.reserve(cfg.dim());
    for (std::size_t i = 0; i < cfg.dim(); ++i) {
        const double tau = cfg.c[i + 1] * clocks[i + 1] + cfg.c[0] * clocks[0];
        x.push_back(cfg.components[i].sample(tau, rng));
    }
    return x;
}

std::vector<double> sample_cond1(const Condition1Config& cfg, double t, RandomStream& rng) {
    const auto clocks = draw_clocks_cond1(cfg, t, rng);
    return sample_cond1_given_clocks(cfg, clocks, rng);
}

std::vector<double> draw_clocks_cond2(const Condition2Config& cfg, double t, RandomStream& rng) {
    std::vector<double> clocks;
    clocks.reserve(cfg.clock_count());
    const StableIndex nu{cfg.nu};
    for (std::size_t j = 0; j < cfg.clock_count(); ++j) {
        clocks.push_back(sample_inverse_stable(nu, t, rng));
    }
    return clocks;
}

std::vector<double> sample_cond2_given_clocks(const Condition2Config& cfg,
                                              std::span<const double> clocks, RandomStream& rng) {
    std::vector<double> x;
    x.reserve(cfg.dim());
    for (std::size_t i = 0; i < cfg.dim(); ++i) {
        double tau = 0.0;
        for (std::size_t j = 0; j < clocks.size(); ++j) tau += cfg.weights[i][j] * clocks[j];
        x.push_back(cfg.components[i].sample(tau, rng));
    }
    return x;
}

std::vector<double> sample_cond2(const Condition2Config& cfg, double t, RandomStream& rng) {
    const auto clocks = draw_clocks_cond2(cfg, t, rng);
    return sample_cond2_given_clocks(cfg, clocks, rng);
}

}  // namespace levymd
