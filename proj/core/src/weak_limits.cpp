#include "levymd/weak_limits.hpp"

#include <cmath>
#include <stdexcept>

#include "levymd/mittag_leffler.hpp"
#include "levymd/subordinators.hpp"

namespace levymd {

double scaling_exponent(bool mean_zero, double nu) {
    if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("scaling_exponent: nu outside (0, 1)");
    return mean_zero ? 1.0 - 0.5 * nu : 1.0 - nu;
}

std::pair<bool, bool> clock_indicators(double nu0, double nui) {
    return {nu0 <= nui, nui <= nu0};
}

LimitSample sample_limit_cond1(const Condition1Config& cfg, const MeanVector& m,
                               RandomStream& rng) {
    const std::size_t h = cfg.dim();
    // Clocks first, in index order: shared L_0, then L_1..L_h, all at time 1.
    std::vector<double> clocks(h + 1);
    for (std::size_t i = 0; i <= h; ++i) {
        clocks[i] = sample_inverse_stable(StableIndex{cfg.nus[i]}, 1.0, rng);
    }
    LimitSample out;
    out.mean_zero = m.is_zero;
    out.condition = 1;
    out.values.resize(h);
    for (std::size_t i = 0; i < h; ++i) {
        const auto [own, shared] = clock_indicators(cfg.nus[0], cfg.nus[i + 1]);
        if (m.is_zero) {
            const double curv = cfg.components[i].curvature();
            const double z = rng.normal();
            const double w = rng.normal();
            double v = 0.0;
            if (own) v += std::sqrt(cfg.c[i + 1] * curv * clocks[i + 1]) * z;
            if (shared) v += std::sqrt(cfg.c[0] * curv * clocks[0]) * w;
            out.values[i] = v;
        } else {
            double v = 0.0;
            if (own) v += cfg.c[i + 1] * m.values[i] * clocks[i + 1];
            if (shared) v += cfg.c[0] * m.values[i] * clocks[0];
            out.values[i] = v;
        }
    }
    return out;
}

double limit_mgf_cond1(const Condition1Config& cfg, const MeanVector& m,
                       std::span<const double> theta) {
    if (theta.size() != cfg.dim()) throw std::invalid_argument("limit_mgf_cond1: bad dimension");
    double prod = 1.0;
    double shared_arg = 0.0;
    for (std::size_t i = 0; i < cfg.dim(); ++i) {
        const auto [own, shared] = clock_indicators(cfg.nus[0], cfg.nus[i + 1]);
        double own_arg = 0.0;
        double shared_term = 0.0;
        if (m.is_zero) {
            const double q = 0.5 * cfg.components[i].curvature() * theta[i] * theta[i];
            own_arg = cfg.c[i + 1] * q;
            shared_term = q;
        } else {
            const double mt = m.values[i] * theta[i];
            own_arg = cfg.c[i + 1] * mt;
            shared_term = mt;
        }
        if (own) prod *= mittag_leffler(MLOrder{cfg.nus[i + 1]}, own_arg);
        if (shared) shared_arg += shared_term;
    }
    return prod * mittag_leffler(MLOrder{cfg.nus[0]}, cfg.c[0] * shared_arg);
}

LimitSample sample_limit_cond2(const Condition2Config& cfg, const MeanVector& m,
                               RandomStream& rng) {
    const std::size_t h = cfg.dim();
    const std::size_t k = cfg.clock_count();
    std::vector<double> clocks(k);
    for (std::size_t j = 0; j < k; ++j) {
        clocks[j] = sample_inverse_stable(StableIndex{cfg.nu}, 1.0, rng);
    }
    LimitSample out;
    out.mean_zero = m.is_zero;
    out.condition = 2;
    out.values.resize(h);
    for (std::size_t i = 0; i < h; ++i) {
        double mix = 0.0;
        for (std::size_t j = 0; j < k; ++j) mix += cfg.weights[i][j] * clocks[j];
        if (m.is_zero) {
            out.values[i] = std::sqrt(cfg.components[i].curvature() * mix) * rng.normal();
        } else {
            out.values[i] = m.values[i] * mix;
        }
    }
    return out;
}

double limit_mgf_cond2(const Condition2Config& cfg, const MeanVector& m,
                       std::span<const double> theta) {
    if (theta.size() != cfg.dim()) throw std::invalid_argument("limit_mgf_cond2: bad dimension");
    const MLOrder order{cfg.nu};
    double prod = 1.0;
    for (std::size_t j = 0; j < cfg.clock_count(); ++j) {
        double arg = 0.0;
        for (std::size_t i = 0; i < cfg.dim(); ++i) {
            arg += m.is_zero ? 0.5 * cfg.weights[i][j] * cfg.components[i].curvature() *
                                   theta[i] * theta[i]
                             : cfg.weights[i][j] * m.values[i] * theta[i];
        }
        prod *= mittag_leffler(order, arg);
    }
    return prod;
}

}  // namespace levymd
