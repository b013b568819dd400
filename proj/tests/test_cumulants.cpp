#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "levymd/cumulants.hpp"
#include "levymd/random.hpp"
#include "oracles.hpp"

using levymd::CumulantModel;
using levymd::MeanVector;
using levymd::RandomStream;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The five model families exercised across every structural test below.
std::vector<CumulantModel> zoo() {
    return {CumulantModel::brownian_drift(1.5, 4.0), CumulantModel::poisson(3.0),
            CumulantModel::compound_poisson_exp(2.0, 4.0),
            CumulantModel::gamma_subordinator(2.0, 5.0), CumulantModel::deterministic(2.0)};
}

}  // namespace

TEST_SUITE("cumulants") {

TEST_CASE("factories reject out-of-range parameters") {
    CHECK_THROWS_AS((void)CumulantModel::brownian_drift(0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS((void)CumulantModel::poisson(0.0), std::domain_error);
    CHECK_THROWS_AS((void)CumulantModel::poisson(-2.0), std::domain_error);
    CHECK_THROWS_AS((void)CumulantModel::compound_poisson_exp(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)CumulantModel::compound_poisson_exp(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)CumulantModel::gamma_subordinator(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)CumulantModel::gamma_subordinator(1.0, -1.0), std::domain_error);
    // Degenerate but legal: zero-variance Brownian and zero deterministic drift.
    CHECK_NOTHROW((void)CumulantModel::brownian_drift(-3.0, 0.0));
    CHECK_NOTHROW((void)CumulantModel::deterministic(0.0));
}

TEST_CASE("kappa(0) = 0 for every model") {
    for (const auto& c : zoo()) {
        CAPTURE(c.name());
        CHECK(c.kappa(0.0) == 0.0);
    }
}

TEST_CASE("closed-form mean and curvature") {
    const auto bm = CumulantModel::brownian_drift(1.5, 4.0);
    CHECK(bm.mean_rate() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(bm.curvature() == doctest::Approx(4.0).epsilon(1e-15));

    const auto po = CumulantModel::poisson(3.0);
    CHECK(po.mean_rate() == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(po.curvature() == doctest::Approx(3.0).epsilon(1e-15));

    const auto cp = CumulantModel::compound_poisson_exp(2.0, 4.0);
    CHECK(cp.mean_rate() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cp.curvature() == doctest::Approx(0.25).epsilon(1e-15));

    const auto ga = CumulantModel::gamma_subordinator(2.0, 5.0);
    CHECK(ga.mean_rate() == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(ga.curvature() == doctest::Approx(0.08).epsilon(1e-15));

    const auto de = CumulantModel::deterministic(2.0);
    CHECK(de.mean_rate() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(de.curvature() == 0.0);
}

TEST_CASE("mean and curvature match finite differences of kappa") {
    const double h = 1e-4;
    for (const auto& c : zoo()) {
        CAPTURE(c.name());
        const auto k = [&](double th) { return c.kappa(th); };
        CHECK(oracle::fd_first(k, h) == doctest::Approx(c.mean_rate()).epsilon(1e-5));
        CHECK(oracle::fd_second(k, h) ==
              doctest::Approx(c.curvature()).epsilon(1e-5).scale(1.0));
    }
}

TEST_CASE("effective domains and +inf outside") {
    const auto cp = CumulantModel::compound_poisson_exp(2.0, 4.0);
    CHECK(cp.domain().hi == doctest::Approx(4.0));
    CHECK(cp.domain().contains(3.999));
    CHECK_FALSE(cp.domain().contains(4.0));
    CHECK(std::isfinite(cp.kappa(3.999)));
    CHECK(cp.kappa(4.0) == kInf);
    CHECK(cp.kappa(7.0) == kInf);

    const auto ga = CumulantModel::gamma_subordinator(2.0, 5.0);
    CHECK(ga.domain().hi == doctest::Approx(5.0));
    CHECK(std::isfinite(ga.kappa(4.999)));
    CHECK(ga.kappa(5.0) == kInf);

    for (const auto& c : zoo()) {
        CHECK(c.domain().contains(0.0));
        CHECK(c.kappa(-50.0) < kInf);
    }
}

TEST_CASE("kappa is midpoint convex on a domain grid") {
    for (const auto& c : zoo()) {
        CAPTURE(c.name());
        const double hi = std::min(c.domain().hi, 6.0);
        for (double a = -6.0; a < hi - 0.2; a += 0.37) {
            for (double b = a + 0.2; b < hi; b += 0.53) {
                const double mid = c.kappa(0.5 * (a + b));
                const double chord = 0.5 * (c.kappa(a) + c.kappa(b));
                CHECK(mid <= chord + 1e-12 * (1.0 + std::abs(chord)));
            }
        }
    }
}

TEST_CASE("sample moments match mean_rate and curvature") {
    const std::size_t n = 200000;
    const double tau = 5.0;
    struct Row {
        CumulantModel model;
        std::uint64_t seed;
    };
    const std::vector<Row> rows = {{CumulantModel::brownian_drift(1.5, 4.0), 101},
                                   {CumulantModel::poisson(2.0), 102},
                                   {CumulantModel::compound_poisson_exp(2.0, 4.0), 103},
                                   {CumulantModel::gamma_subordinator(2.0, 5.0), 104}};
    for (const auto& row : rows) {
        CAPTURE(row.model.name());
        levymd::MeanAccumulator acc;
        levymd::MeanAccumulator acc_sq;
        for (std::size_t r = 0; r < n; ++r) {
            RandomStream rng(row.seed, r);
            const double v = row.model.sample(tau, rng);
            acc.add(v);
            acc_sq.add(v * v);
        }
        const auto est = acc.finish();
        const double want_mean = row.model.mean_rate() * tau;
        const double want_var = row.model.curvature() * tau;
        CHECK(std::abs(est.mean - want_mean) <= 3.0 * est.se);
        // Variance through the second moment; its SE comes from the v^2 sample.
        const auto est_sq = acc_sq.finish();
        const double var_hat = est_sq.mean - est.mean * est.mean;
        const double se_var = est_sq.se + 2.0 * std::abs(est.mean) * est.se;
        CHECK(std::abs(var_hat - want_var) <= 3.0 * se_var);
    }
}

TEST_CASE("deterministic and boundary draws are exact") {
    const auto de = CumulantModel::deterministic(2.0);
    RandomStream rng(7, 0);
    CHECK(de.sample(3.5, rng) == 7.0);
    for (const auto& c : zoo()) {
        RandomStream r2(8, 0);
        CHECK(c.sample(0.0, r2) == 0.0);
        RandomStream r3(8, 1);
        CHECK_THROWS_AS((void)c.sample(-1.0, r3), std::domain_error);
    }
}

TEST_CASE("empirical cumulant matches kappa") {
    // (1/tau) log E exp(theta S(tau)) == kappa(theta); SE via the delta method.
    const std::size_t n = 200000;
    const double tau = 2.0;
    struct Probe {
        CumulantModel model;
        double theta;
        std::uint64_t seed;
    };
    const std::vector<Probe> probes = {{CumulantModel::brownian_drift(0.5, 1.0), 0.4, 201},
                                       {CumulantModel::poisson(2.0), 0.3, 202},
                                       {CumulantModel::compound_poisson_exp(2.0, 4.0), 1.0, 203},
                                       {CumulantModel::gamma_subordinator(2.0, 5.0), 1.5, 204},
                                       {CumulantModel::deterministic(2.0), -0.7, 205}};
    for (const auto& p : probes) {
        CAPTURE(p.model.name());
        const auto est = oracle::mc_mean(n, p.seed, [&](RandomStream& rng) {
            return std::exp(p.theta * p.model.sample(tau, rng));
        });
        const double khat = std::log(est.mean) / tau;
        const double se = est.se / (est.mean * tau);
        CHECK(std::abs(khat - p.model.kappa(p.theta)) <= 3.0 * se + 1e-12);
    }
}

TEST_CASE("mean_vector flags the all-zero case") {
    const std::vector<CumulantModel> zero = {CumulantModel::brownian_drift(0.0, 1.0),
                                             CumulantModel::deterministic(0.0)};
    const MeanVector mz = mean_vector(zero);
    CHECK(mz.is_zero);
    REQUIRE(mz.values.size() == 2);
    CHECK(mz.values[0] == 0.0);
    CHECK(mz.values[1] == 0.0);

    const std::vector<CumulantModel> mixed = {CumulantModel::brownian_drift(0.0, 1.0),
                                              CumulantModel::poisson(3.0)};
    const MeanVector mm = mean_vector(mixed);
    CHECK_FALSE(mm.is_zero);
    CHECK(mm.values[1] == doctest::Approx(3.0));
}

}  // TEST_SUITE
