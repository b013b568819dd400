#include "levymd/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "levymd/parallel.hpp"

namespace levymd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kBlock = 4096;

std::function<double(std::span<const double>)> md_rate_fn(const Condition1Config& cfg,
                                                          const MeanVector& m) {
    const double nu0 = cfg.nus[0];
    bool below_all = true, above_all = true;
    for (std::size_t i = 1; i < cfg.nus.size(); ++i) {
        below_all = below_all && nu0 < cfg.nus[i];
        above_all = above_all && nu0 > cfg.nus[i];
    }
    if (below_all) {
        return [cfg, m](std::span<const double> x) { return md_rate_separable(cfg, m, x); };
    }
    if (above_all && !m.is_zero) {
        return [cfg, m](std::span<const double> x) { return md_rate_single_clock(cfg, m, x); };
    }
    auto f = make_psi_tilde(cfg, m);
    auto opts = ConjugateOptions::boxed(f);
    return [f, opts](std::span<const double> x) { return conjugate(f, x, opts).value; };
}

std::function<double(std::span<const double>)> conjugate_rate_fn(LimitCumulant f) {
    auto opts = ConjugateOptions::boxed(f);
    return [f = std::move(f), opts](std::span<const double> x) {
        return conjugate(f, x, opts).value;
    };
}

MdDiagnostic run_rare_event_scan(
    const std::function<std::vector<double>(double, RandomStream&)>& sampler,
    const std::function<double(double)>& weight, double target, const HalfSpace& set,
    double gamma, std::span<const double> t_grid, std::size_t n, std::uint64_t seed,
    unsigned threads) {
    MdDiagnostic out;
    out.target = target;
    out.set = set;
    out.gamma = gamma;
    out.n = n;
    out.points.reserve(t_grid.size());
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        const double t = t_grid[ti];
        const std::size_t nblocks = (n + kBlock - 1) / kBlock;
        std::vector<std::size_t> block_hits(nblocks, 0);
        parallel_blocks(n, kBlock, threads, [&](std::size_t b, std::size_t begin, std::size_t end) {
            std::size_t local = 0;
            for (std::size_t r = begin; r < end; ++r) {
                RandomStream rng(seed, ti * n + r);
                const auto y = sampler(t, rng);
                if (set.contains(y)) ++local;
            }
            block_hits[b] = local;
        });
        std::size_t hits = 0;
        for (const auto h : block_hits) hits += h;
        RareEventPoint pt{t, kInf, kInf, hits};
        if (hits > 0) {
            const double p = static_cast<double>(hits) / static_cast<double>(n);
            const double w = weight(t);
            pt.estimate = -w * std::log(p);
            pt.se = w * std::sqrt((1.0 - p) / (p * static_cast<double>(n)));
        }
        out.points.push_back(pt);
    }
    return out;
}

WeakDiagnostic run_ks(const std::function<std::vector<double>(RandomStream&)>& scaled,
                      const std::function<std::vector<double>(RandomStream&)>& limit,
                      std::size_t dim, double t, std::size_t n, std::uint64_t seed,
                      unsigned threads) {
    std::vector<std::vector<double>> a(dim, std::vector<double>(n));
    std::vector<std::vector<double>> b(dim, std::vector<double>(n));
    parallel_blocks(n, kBlock, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            RandomStream rs(seed, r);
            const auto xs = scaled(rs);
            RandomStream rl(seed, n + r);
            const auto xl = limit(rl);
            for (std::size_t i = 0; i < dim; ++i) {
                a[i][r] = xs[i];
                b[i][r] = xl[i];
            }
        }
    });
    WeakDiagnostic out;
    out.t = t;
    out.n = n;
    out.ks_threshold = ks_critical(0.01, n, n);
    out.ks.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.ks.push_back(ks_statistic(a[i], b[i]));
    return out;
}

McEstimate run_mgf(const std::function<std::vector<double>(RandomStream&)>& limit,
                   std::span<const double> theta, std::size_t n, std::uint64_t seed,
                   unsigned threads) {
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<MeanAccumulator> partial(nblocks);
    parallel_blocks(n, kBlock, threads, [&](std::size_t b, std::size_t begin, std::size_t end) {
        MeanAccumulator acc;
        for (std::size_t r = begin; r < end; ++r) {
            RandomStream rng(seed, r);
            const auto x = limit(rng);
            double dot = 0.0;
            for (std::size_t i = 0; i < theta.size(); ++i) dot += theta[i] * x[i];
            acc.add(std::exp(dot));
        }
        partial[b] = acc;
    });
    MeanAccumulator total;
    for (const auto& acc : partial) total.merge(acc);
    return total.finish();
}

}  // namespace

// ==== scaling family =========================================================

ScalingFamily::ScalingFamily(double g) : gamma(g) {
    if (!(g > 0.0 && g < 1.0)) throw std::domain_error("scaling: gamma must lie in (0, 1)");
}

double ScalingFamily::a(double t) const { return std::pow(t, -gamma); }

bool HalfSpace::contains(std::span<const double> x) const {
    return upper ? x[axis] >= bound : x[axis] <= bound;
}

bool HalfSpace::contains_origin() const { return upper ? bound <= 0.0 : bound >= 0.0; }

double half_space_infimum(const std::function<double(std::span<const double>)>& rate,
                          std::size_t dim, const HalfSpace& set) {
    if (set.axis >= dim) throw std::invalid_argument("half_space_infimum: axis out of range");
    if (set.contains_origin()) return 0.0;
    std::vector<double> p(dim, 0.0);
    p[set.axis] = set.bound;
    double best = rate(p);
    if (dim == 1) return best;
    for (int pass = 0; pass < 3; ++pass) {
        const double before = best;
        for (std::size_t axis = 0; axis < dim; ++axis) {
            if (axis == set.axis) continue;
            auto section = [&](double s) {
                std::vector<double> q = p;
                q[axis] = s;
                return rate(q);
            };
            // The section is convex in s (possibly +inf off a cone): coarse
            // scan to bracket the minimum, then ternary search inside the
            // winning cell.  +inf compares as "worse" and needs no casing.
            const double lo = -32.0, hi = 32.0;
            double arg = p[axis], val = best;
            const int coarse = 65;
            for (int k = 0; k < coarse; ++k) {
                const double s = lo + (hi - lo) * k / (coarse - 1);
                const double v = section(s);
                if (v < val) {
                    val = v;
                    arg = s;
                }
            }
            const double step = (hi - lo) / (coarse - 1);
            double aa = arg - step, bb = arg + step;
            for (int it = 0; it < 70; ++it) {
                const double m1 = aa + (bb - aa) / 3.0;
                const double m2 = bb - (bb - aa) / 3.0;
                if (section(m1) <= section(m2)) bb = m2; else aa = m1;
            }
            const double mid = 0.5 * (aa + bb);
            const double refined = section(mid);
            if (refined < val) {
                val = refined;
                arg = mid;
            }
            if (val < best) {
                best = val;
                p[axis] = arg;
            }
        }
        if (!(before - best > 1e-12 * (1.0 + std::abs(best)))) break;
    }
    return best;
}

// ==== scaled samples =========================================================

std::vector<double> scaled_md_sample_cond1(const Condition1Config& cfg, const MeanVector& m,
                                           const ScalingFamily& scale, double t,
                                           RandomStream& rng) {
    auto x = sample_cond1(cfg, t, rng);
    const double ta = t * scale.a(t);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double nu_star = std::max(cfg.nus[0], cfg.nus[i + 1]);
        const double alpha = scaling_exponent(m.is_zero, nu_star);
        x[i] *= std::pow(ta, alpha) / t;
    }
    return x;
}

std::vector<double> scaled_md_sample_cond2(const Condition2Config& cfg, const MeanVector& m,
                                           const ScalingFamily& scale, double t,
                                           RandomStream& rng) {
    auto x = sample_cond2(cfg, t, rng);
    const double factor = std::pow(t * scale.a(t), scaling_exponent(m.is_zero, cfg.nu)) / t;
    for (auto& xi : x) xi *= factor;
    return x;
}

std::vector<double> scaled_weak_sample_cond1(const Condition1Config& cfg, const MeanVector& m,
                                             double t, RandomStream& rng) {
    auto x = sample_cond1(cfg, t, rng);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double nu_star = std::max(cfg.nus[0], cfg.nus[i + 1]);
        const double alpha = scaling_exponent(m.is_zero, nu_star);
        x[i] *= std::pow(t, alpha) / t;
    }
    return x;
}

std::vector<double> scaled_weak_sample_cond2(const Condition2Config& cfg, const MeanVector& m,
                                             double t, RandomStream& rng) {
    auto x = sample_cond2(cfg, t, rng);
    const double factor = std::pow(t, scaling_exponent(m.is_zero, cfg.nu)) / t;
    for (auto& xi : x) xi *= factor;
    return x;
}

// ==== targets ================================================================

double md_target_cond1(const Condition1Config& cfg, const MeanVector& m, const HalfSpace& set) {
    cfg.validate();
    return half_space_infimum(md_rate_fn(cfg, m), cfg.dim(), set);
}

double md_target_cond2(const Condition2Config& cfg, const MeanVector& m, const HalfSpace& set) {
    cfg.validate();
    return half_space_infimum(conjugate_rate_fn(make_upsilon_tilde(cfg, m)), cfg.dim(), set);
}

double ld_target_cond1(const Condition1Config& cfg, const HalfSpace& set) {
    cfg.validate();
    return half_space_infimum(conjugate_rate_fn(make_psi(cfg)), cfg.dim(), set);
}

double ld_target_cond2(const Condition2Config& cfg, const HalfSpace& set) {
    cfg.validate();
    return half_space_infimum(conjugate_rate_fn(make_upsilon(cfg)), cfg.dim(), set);
}

// ==== rare-event scans =======================================================

MdDiagnostic estimate_md_rate_cond1(const Condition1Config& cfg, const MeanVector& m,
                                    const ScalingFamily& scale, std::span<const double> t_grid,
                                    std::size_t n, const HalfSpace& set, std::uint64_t seed,
                                    unsigned threads) {
    cfg.validate();
    auto sampler = [&](double t, RandomStream& rng) {
        return scaled_md_sample_cond1(cfg, m, scale, t, rng);
    };
    auto weight = [&](double t) { return scale.a(t); };
    return run_rare_event_scan(sampler, weight, md_target_cond1(cfg, m, set), set, scale.gamma,
                               t_grid, n, seed, threads);
}

MdDiagnostic estimate_md_rate_cond2(const Condition2Config& cfg, const MeanVector& m,
                                    const ScalingFamily& scale, std::span<const double> t_grid,
                                    std::size_t n, const HalfSpace& set, std::uint64_t seed,
                                    unsigned threads) {
    cfg.validate();
    auto sampler = [&](double t, RandomStream& rng) {
        return scaled_md_sample_cond2(cfg, m, scale, t, rng);
    };
    auto weight = [&](double t) { return scale.a(t); };
    return run_rare_event_scan(sampler, weight, md_target_cond2(cfg, m, set), set, scale.gamma,
                               t_grid, n, seed, threads);
}

MdDiagnostic estimate_ld_rate_cond1(const Condition1Config& cfg, std::span<const double> t_grid,
                                    std::size_t n, const HalfSpace& set, std::uint64_t seed,
                                    unsigned threads) {
    cfg.validate();
    auto sampler = [&](double t, RandomStream& rng) {
        auto x = sample_cond1(cfg, t, rng);
        for (auto& xi : x) xi /= t;
        return x;
    };
    auto weight = [](double t) { return 1.0 / t; };
    return run_rare_event_scan(sampler, weight, ld_target_cond1(cfg, set), set, 0.0, t_grid, n,
                               seed, threads);
}

MdDiagnostic estimate_ld_rate_cond2(const Condition2Config& cfg, std::span<const double> t_grid,
                                    std::size_t n, const HalfSpace& set, std::uint64_t seed,
                                    unsigned threads) {
    cfg.validate();
    auto sampler = [&](double t, RandomStream& rng) {
        auto x = sample_cond2(cfg, t, rng);
        for (auto& xi : x) xi /= t;
        return x;
    };
    auto weight = [](double t) { return 1.0 / t; };
    return run_rare_event_scan(sampler, weight, ld_target_cond2(cfg, set), set, 0.0, t_grid, n,
                               seed, threads);
}

// ==== weak-convergence diagnostics ===========================================

WeakDiagnostic weak_limit_ks_cond1(const Condition1Config& cfg, const MeanVector& m, double t,
                                   std::size_t n, std::uint64_t seed, unsigned threads) {
    cfg.validate();
    auto scaled = [&](RandomStream& rng) { return scaled_weak_sample_cond1(cfg, m, t, rng); };
    auto limit = [&](RandomStream& rng) { return sample_limit_cond1(cfg, m, rng).values; };
    return run_ks(scaled, limit, cfg.dim(), t, n, seed, threads);
}

WeakDiagnostic weak_limit_ks_cond2(const Condition2Config& cfg, const MeanVector& m, double t,
                                   std::size_t n, std::uint64_t seed, unsigned threads) {
    cfg.validate();
    auto scaled = [&](RandomStream& rng) { return scaled_weak_sample_cond2(cfg, m, t, rng); };
    auto limit = [&](RandomStream& rng) { return sample_limit_cond2(cfg, m, rng).values; };
    return run_ks(scaled, limit, cfg.dim(), t, n, seed, threads);
}

McEstimate mc_limit_mgf_cond1(const Condition1Config& cfg, const MeanVector& m,
                              std::span<const double> theta, std::size_t n, std::uint64_t seed,
                              unsigned threads) {
    cfg.validate();
    auto limit = [&](RandomStream& rng) { return sample_limit_cond1(cfg, m, rng).values; };
    return run_mgf(limit, theta, n, seed, threads);
}

McEstimate mc_limit_mgf_cond2(const Condition2Config& cfg, const MeanVector& m,
                              std::span<const double> theta, std::size_t n, std::uint64_t seed,
                              unsigned threads) {
    cfg.validate();
    auto limit = [&](RandomStream& rng) { return sample_limit_cond2(cfg, m, rng).values; };
    return run_mgf(limit, theta, n, seed, threads);
}

}  // namespace levymd
