#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "levymd/rate_functions.hpp"

using levymd::closed_form_u;
using levymd::closed_form_v;
using levymd::Condition1Config;
using levymd::Condition2Config;
using levymd::ConjugateOptions;
using levymd::CumulantModel;
using levymd::LimitCumulant;
using levymd::MeanVector;
using levymd::StableIndex;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double conj_value(const LimitCumulant& f, std::vector<double> x) {
    return levymd::conjugate(f, x, ConjugateOptions::boxed(f)).value;
}

}  // namespace

TEST_SUITE("rate-functions") {

TEST_CASE("psi closed values") {
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0)},
                                  {1.0, 1.0},
                                  {0.5, 0.5}};
    std::vector<double> theta = {2.0};
    // kappa(2) = 2; both clock terms contribute 2^(1/0.5) = 4.
    CHECK(levymd::psi_cond1(cfg, theta) == doctest::Approx(8.0).epsilon(1e-12));
    theta = {0.0};
    CHECK(levymd::psi_cond1(cfg, theta) == 0.0);

    // Negative cumulants are gated out of every clock term.
    const Condition1Config drift = {{CumulantModel::brownian_drift(-1.0, 0.0)},
                                    {1.0, 1.0},
                                    {0.5, 0.5}};
    theta = {1.0};
    CHECK(levymd::psi_cond1(drift, theta) == 0.0);

    // A pole in one component propagates +inf.
    const Condition1Config pole = {{CumulantModel::compound_poisson_exp(1.0, 1.0)},
                                   {1.0, 1.0},
                                   {0.5, 0.5}};
    theta = {2.0};
    CHECK(levymd::psi_cond1(pole, theta) == kInf);
}

TEST_CASE("upsilon closed values") {
    const Condition2Config one = {{CumulantModel::poisson(1.0)}, {{1.0}}, 0.5};
    std::vector<double> theta = {1.0};
    const double k = std::expm1(1.0);
    CHECK(levymd::upsilon_cond2(one, theta) == doctest::Approx(k * k).epsilon(1e-12));

    const Condition2Config two = {{CumulantModel::poisson(1.0), CumulantModel::poisson(1.0)},
                                  {{1.0, 1.0}, {1.0, 1.0}},
                                  0.5};
    theta = {1.0, 1.0};
    // Each of the two clocks sees 2 kappa, so each contributes (2 kappa)^2.
    CHECK(levymd::upsilon_cond2(two, theta) == doctest::Approx(8.0 * k * k).epsilon(1e-12));
    theta = {0.0, 0.0};
    CHECK(levymd::upsilon_cond2(two, theta) == 0.0);
}

TEST_CASE("tilde kernels: closed values and gates") {
    // Centered branch, nu_0 below the component index: only the component
    // clock term is active and carries the quadratic kernel.
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0)},
                                  {1.0, 1.0},
                                  {0.3, 0.6}};
    const MeanVector zero = {{0.0}, true};
    std::vector<double> theta = {2.0};
    CHECK(levymd::psi_tilde(cfg, zero, theta) ==
          doctest::Approx(std::pow(2.0, 5.0 / 3.0)).epsilon(1e-12));

    // A tie nu_0 == nu_1 activates both clock terms.
    const Condition1Config tie = {{CumulantModel::brownian_drift(0.0, 1.0)},
                                  {1.0, 1.0},
                                  {0.5, 0.5}};
    theta = {1.0};
    CHECK(levymd::psi_tilde(tie, zero, theta) == doctest::Approx(0.5).epsilon(1e-12));

    // Mean branch with every sign gate off returns exactly zero.
    const Condition1Config pois = {{CumulantModel::poisson(1.0)}, {1.0, 1.0}, {0.3, 0.6}};
    const MeanVector m1 = {{1.0}, false};
    theta = {-1.0};
    CHECK(levymd::psi_tilde(pois, m1, theta) == 0.0);
    theta = {1.0};
    CHECK(levymd::psi_tilde(pois, m1, theta) == doctest::Approx(std::pow(1.0, 1.0 / 0.6)));

    const Condition2Config c2 = {{CumulantModel::brownian_drift(0.0, 2.0)}, {{1.0}}, 0.5};
    theta = {1.0};
    CHECK(levymd::upsilon_tilde(c2, zero, theta) == doctest::Approx(1.0).epsilon(1e-12));
    const Condition2Config c2p = {{CumulantModel::poisson(2.0)}, {{1.0}}, 0.5};
    const MeanVector m2 = {{2.0}, false};
    theta = {-0.5};
    CHECK(levymd::upsilon_tilde(c2p, m2, theta) == 0.0);
}

TEST_CASE("closed forms: frozen values, symmetry, degenerate branches") {
    CHECK(closed_form_u(StableIndex(0.5), 1.0, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(closed_form_u(StableIndex(0.5), 2.0, 1.0) ==
          doctest::Approx(0.4724703937).epsilon(1e-9));
    CHECK(closed_form_u(StableIndex(0.6), 1.0, 0.5) == doctest::Approx(0.254675).epsilon(1e-5));
    CHECK(closed_form_v(StableIndex(0.5), 2.0, 1.0) == doctest::Approx(0.0625).epsilon(1e-12));

    // U is even in x; V is invariant under joint sign flips of mean and x.
    for (const double x : {0.25, 1.0, 3.0}) {
        CHECK(closed_form_u(StableIndex(0.7), 1.5, x) == closed_form_u(StableIndex(0.7), 1.5, -x));
        CHECK(closed_form_v(StableIndex(0.7), 1.5, x) == closed_form_v(StableIndex(0.7), -1.5, -x));
    }

    // Degenerate kernels concentrate at zero.
    CHECK(closed_form_u(StableIndex(0.5), 0.0, 0.0) == 0.0);
    CHECK(closed_form_u(StableIndex(0.5), 0.0, 1.0) == kInf);
    CHECK(closed_form_v(StableIndex(0.5), 0.0, 0.0) == 0.0);
    CHECK(closed_form_v(StableIndex(0.5), 0.0, -2.0) == kInf);
    CHECK(closed_form_v(StableIndex(0.5), 1.0, -0.5) == kInf);
    CHECK(closed_form_u(StableIndex(0.5), 1.0, 0.0) == 0.0);
    CHECK(closed_form_v(StableIndex(0.5), 1.0, 0.0) == 0.0);
    CHECK_THROWS_AS((void)closed_form_u(StableIndex(0.5), -1.0, 1.0), std::domain_error);
}

TEST_CASE("optimizer preconditions") {
    CHECK_THROWS_AS((void)levymd::md_optimizer_quadratic(StableIndex(0.5), 0.0, 1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS((void)levymd::md_optimizer_quadratic(StableIndex(0.5), 1.0, 0.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS((void)levymd::md_optimizer_linear(StableIndex(0.5), 1.0, 0.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS((void)levymd::md_optimizer_linear(StableIndex(0.5), 1.0, 1.0, -1.0),
                    std::domain_error);
}

TEST_CASE("conjugate is exactly zero at the origin and positive elsewhere") {
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0),
                                   CumulantModel::poisson(1.0)},
                                  {1.0, 1.0, 0.5},
                                  {0.5, 0.75, 0.6}};
    const auto psi = levymd::make_psi(cfg);
    const auto psi_t = levymd::make_psi_tilde(cfg, mean_vector(cfg.components));
    const Condition2Config cfg2 = {{CumulantModel::brownian_drift(0.0, 1.0),
                                    CumulantModel::poisson(1.0)},
                                   {{1.0, 0.5}, {0.5, 1.0}},
                                   0.6};
    const auto ups = levymd::make_upsilon(cfg2);
    const auto ups_t = levymd::make_upsilon_tilde(cfg2, mean_vector(cfg2.components));

    for (const auto* f : {&psi, &ups, &psi_t, &ups_t}) {
        CHECK(conj_value(*f, {0.0, 0.0}) == 0.0);
        for (const double s : {-1.0, 0.5, 1.0}) {
            const double v = conj_value(*f, {s, 0.5 * s});
            CHECK(v > 0.0);
        }
    }
}

TEST_CASE("conjugate rejects bad arguments") {
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0)},
                                  {1.0, 1.0},
                                  {0.5, 0.5}};
    const auto psi = levymd::make_psi(cfg);
    const std::vector<double> wrong = {1.0, 2.0};
    CHECK_THROWS_AS((void)levymd::conjugate(psi, wrong, ConjugateOptions::boxed(psi)),
                    std::invalid_argument);
    const std::vector<double> nonfinite = {kInf};
    CHECK_THROWS_AS((void)levymd::conjugate(psi, nonfinite, ConjugateOptions::boxed(psi)),
                    std::domain_error);
    std::vector<double> theta = {1.0, 2.0};
    CHECK_THROWS_AS((void)levymd::psi_cond1(cfg, theta), std::invalid_argument);
}

TEST_CASE("large-deviation conjugate of the Brownian probe") {
    // psi(theta) = theta^4 / 2, so I(x) = 0.75 |x|^(4/3) / 2^(1/3).
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0)},
                                  {1.0, 1.0},
                                  {0.5, 0.5}};
    const auto psi = levymd::make_psi(cfg);
    for (const double x : {-1.5, -0.5, 0.5, 1.0, 1.5}) {
        const double want = 0.75 * std::pow(std::abs(x), 4.0 / 3.0) / std::cbrt(2.0);
        CHECK(conj_value(psi, {x}) == doctest::Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("numeric conjugate matches the separable closed form") {
    // nu_0 strictly below both component indices; centered branch.
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0),
                                   CumulantModel::brownian_drift(0.0, 2.0)},
                                  {0.5, 1.0, 2.0},
                                  {0.3, 0.5, 0.6}};
    const MeanVector zero = {{0.0, 0.0}, true};
    const auto f = levymd::make_psi_tilde(cfg, zero);
    for (const double x1 : {-1.5, -0.75, 0.0, 0.75, 1.5}) {
        for (const double x2 : {-1.5, -0.75, 0.0, 0.75, 1.5}) {
            CAPTURE(x1);
            CAPTURE(x2);
            const std::vector<double> x = {x1, x2};
            const double numeric = conj_value(f, x);
            const double closed = levymd::md_rate_separable(cfg, zero, x);
            CHECK(numeric == doctest::Approx(closed).epsilon(1e-4));
            CHECK(numeric <= closed + 1e-9);  // the numeric sup is a lower bound
            // Joint conjugate splits across axes.
            const Condition1Config a = {{cfg.components[0]}, {0.5, 1.0}, {0.3, 0.5}};
            const Condition1Config b = {{cfg.components[1]}, {0.5, 2.0}, {0.3, 0.6}};
            const MeanVector z1 = {{0.0}, true};
            const double split = conj_value(levymd::make_psi_tilde(a, z1), {x1}) +
                                 conj_value(levymd::make_psi_tilde(b, z1), {x2});
            CHECK(numeric == doctest::Approx(split).epsilon(1e-4));
        }
    }

    // Mean branch: one-sided kernels, +inf off the orthant of the means.
    const Condition1Config cfgm = {{CumulantModel::poisson(1.0),
                                    CumulantModel::gamma_subordinator(2.0, 5.0)},
                                   {0.5, 1.0, 2.0},
                                   {0.3, 0.5, 0.6}};
    const MeanVector m = mean_vector(cfgm.components);
    REQUIRE_FALSE(m.is_zero);
    const auto fm = levymd::make_psi_tilde(cfgm, m);
    for (const double x1 : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        for (const double x2 : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            CAPTURE(x1);
            CAPTURE(x2);
            const std::vector<double> x = {x1, x2};
            const double numeric = conj_value(fm, x);
            const double closed = levymd::md_rate_separable(cfgm, m, x);
            if (std::isinf(closed)) {
                CHECK(std::isinf(numeric));
            } else {
                CHECK(numeric == doctest::Approx(closed).epsilon(1e-4));
                CHECK(numeric <= closed + 1e-9);
            }
        }
    }
}

TEST_CASE("numeric conjugate matches the single-clock closed form") {
    // nu_0 strictly above every component index, nonzero means.
    const Condition1Config cfg = {{CumulantModel::poisson(1.0), CumulantModel::poisson(2.0)},
                                  {1.0, 1.0, 1.0},
                                  {0.8, 0.4, 0.5}};
    const MeanVector m = mean_vector(cfg.components);
    const auto f = levymd::make_psi_tilde(cfg, m);

    SUBCASE("proportional point") {
        const std::vector<double> x = {0.6, 1.2};  // x = 0.6 m
        const double numeric = conj_value(f, x);
        const double closed = levymd::md_rate_single_clock(cfg, m, x);
        CHECK(numeric == doctest::Approx(closed).epsilon(1e-4));
    }
    SUBCASE("non-proportional point") {
        const std::vector<double> x = {0.3, 1.6};
        const double numeric = conj_value(f, x);
        const double closed = levymd::md_rate_single_clock(cfg, m, x);
        CHECK(closed == doctest::Approx(closed_form_v(StableIndex(0.8), 2.0, 1.6)));
        CHECK(numeric == doctest::Approx(closed).epsilon(1e-4));
    }
    SUBCASE("outside the admissible cone both sides report +inf") {
        const std::vector<double> x = {-0.5, 1.0};
        CHECK(levymd::md_rate_single_clock(cfg, m, x) == kInf);
        CHECK(conj_value(f, x) == kInf);
    }
    SUBCASE("zero-mean component pins its coordinate") {
        const Condition1Config cfg0 = {{CumulantModel::brownian_drift(0.0, 1.0),
                                        CumulantModel::poisson(1.0)},
                                       {1.0, 1.0, 1.0},
                                       {0.8, 0.4, 0.5}};
        const MeanVector m0 = mean_vector(cfg0.components);
        REQUIRE_FALSE(m0.is_zero);
        const auto f0 = levymd::make_psi_tilde(cfg0, m0);
        const std::vector<double> off = {0.5, 1.0};
        CHECK(levymd::md_rate_single_clock(cfg0, m0, off) == kInf);
        CHECK(conj_value(f0, off) == kInf);
        const std::vector<double> on = {0.0, 1.0};
        const double numeric = conj_value(f0, on);
        const double closed = levymd::md_rate_single_clock(cfg0, m0, on);
        CHECK(numeric == doctest::Approx(closed).epsilon(1e-4));
    }
    SUBCASE("three components, proportional") {
        const Condition1Config cfg3 = {{CumulantModel::poisson(1.0), CumulantModel::poisson(2.0),
                                        CumulantModel::poisson(0.5)},
                                       {1.2, 1.0, 1.0, 1.0},
                                       {0.8, 0.4, 0.5, 0.6}};
        const MeanVector m3 = mean_vector(cfg3.components);
        const auto f3 = levymd::make_psi_tilde(cfg3, m3);
        const std::vector<double> x = {0.5, 1.0, 0.25};  // x = 0.5 m
        const double numeric = conj_value(f3, x);
        const double closed = levymd::md_rate_single_clock(cfg3, m3, x);
        CHECK(numeric == doctest::Approx(closed).epsilon(1e-3).scale(1e-3));
    }
}

TEST_CASE("single-clock ridge: optimal dual mass is pinned") {
    // At a proportional point x = alpha m the objective depends on theta only
    // through eta = <theta, m>, whose optimum is available in closed form.
    const Condition1Config cfg = {{CumulantModel::poisson(1.0), CumulantModel::poisson(2.0)},
                                  {1.5, 1.0, 1.0},
                                  {0.75, 0.5, 0.6}};
    const MeanVector m = mean_vector(cfg.components);
    const auto f = levymd::make_psi_tilde(cfg, m);
    const double alpha = 0.4;
    const std::vector<double> x = {alpha * m.values[0], alpha * m.values[1]};
    const auto res = levymd::conjugate(f, x, ConjugateOptions::boxed(f));
    REQUIRE(res.argmax.has_value());
    double eta = 0.0;
    for (std::size_t i = 0; i < m.values.size(); ++i) eta += (*res.argmax)[i] * m.values[i];
    const double nu0 = 0.75;
    const double c0 = 1.5;
    const double eta_star = std::pow(alpha * nu0, nu0 / (1.0 - nu0)) /
                            std::pow(c0, 1.0 / (1.0 - nu0));
    CHECK(std::abs(eta - eta_star) <= 1e-6);
}

TEST_CASE("numeric argmax matches the stationary point formulas") {
    // Separable h = 1 configurations so the dual optimum is one-dimensional.
    const double c1 = 1.5;

    // Centered branch.
    const Condition1Config cfgu = {{CumulantModel::brownian_drift(0.0, 2.0)},
                                   {1.0, c1},
                                   {0.3, 0.6}};
    const MeanVector zero = {{0.0}, true};
    const auto fu = levymd::make_psi_tilde(cfgu, zero);
    const std::vector<double> xu = {1.0};
    const auto ru = levymd::conjugate(fu, xu, ConjugateOptions::boxed(fu));
    REQUIRE(ru.argmax.has_value());
    const double want_u = levymd::md_optimizer_quadratic(StableIndex(0.6), c1, 2.0, 1.0);
    CHECK(std::abs((*ru.argmax)[0] - want_u) <= 1e-6);

    // Mean branch.
    const Condition1Config cfgv = {{CumulantModel::poisson(2.0)}, {1.0, c1}, {0.3, 0.6}};
    const MeanVector m = mean_vector(cfgv.components);
    const auto fv = levymd::make_psi_tilde(cfgv, m);
    const std::vector<double> xv = {1.0};
    const auto rv = levymd::conjugate(fv, xv, ConjugateOptions::boxed(fv));
    REQUIRE(rv.argmax.has_value());
    const double want_v = levymd::md_optimizer_linear(StableIndex(0.6), c1, 2.0, 1.0);
    CHECK(std::abs((*rv.argmax)[0] - want_v) <= 1e-6);
}

TEST_CASE("steep poles keep the conjugate finite at large arguments") {
    const Condition1Config cfg = {{CumulantModel::compound_poisson_exp(1.0, 1.0)},
                                  {1.0, 1.0},
                                  {0.5, 0.5}};
    const auto psi = levymd::make_psi(cfg);
    const auto opts = ConjugateOptions::boxed(psi);
    CHECK(opts.hi[0] == doctest::Approx(0.99));  // pole inset below beta = 1
    CHECK(opts.lo[0] == doctest::Approx(-8.0));
    double prev = 0.0;
    for (const double x : {1.0, 5.0, 20.0, 50.0}) {
        const double v = conj_value(psi, {x});
        CHECK(std::isfinite(v));
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("explicit rate preconditions") {
    const MeanVector m = {{1.0}, false};
    const MeanVector zero = {{0.0}, true};
    const std::vector<double> x = {0.5};

    Condition1Config wrong_order = {{CumulantModel::poisson(1.0)}, {1.0, 1.0}, {0.8, 0.4}};
    CHECK_THROWS_AS((void)levymd::md_rate_separable(wrong_order, m, x), std::invalid_argument);
    Condition1Config tie = {{CumulantModel::poisson(1.0)}, {1.0, 1.0}, {0.5, 0.5}};
    CHECK_THROWS_AS((void)levymd::md_rate_separable(tie, m, x), std::invalid_argument);

    Condition1Config below = {{CumulantModel::poisson(1.0)}, {1.0, 1.0}, {0.4, 0.8}};
    CHECK_THROWS_AS((void)levymd::md_rate_single_clock(below, m, x), std::invalid_argument);
    Condition1Config above = {{CumulantModel::brownian_drift(0.0, 1.0)}, {1.0, 1.0}, {0.8, 0.4}};
    CHECK_THROWS_AS((void)levymd::md_rate_single_clock(above, zero, x), std::invalid_argument);
}

TEST_CASE("admissible cone membership") {
    const MeanVector m = {{1.0, -2.0, 0.0}, false};
    const std::vector<double> in1 = {0.5, -1.0, 0.0};
    CHECK(levymd::in_admissible_cone(m, in1));
    const std::vector<double> in2 = {0.0, 0.0, 0.0};
    CHECK(levymd::in_admissible_cone(m, in2));
    const std::vector<double> out1 = {-0.5, -1.0, 0.0};
    CHECK_FALSE(levymd::in_admissible_cone(m, out1));
    const std::vector<double> out2 = {0.5, 1.0, 0.0};
    CHECK_FALSE(levymd::in_admissible_cone(m, out2));
    const std::vector<double> out3 = {0.5, -1.0, 0.1};
    CHECK_FALSE(levymd::in_admissible_cone(m, out3));
}

}  // TEST_SUITE
