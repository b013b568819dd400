// Microbenchmarks for the hot paths: special-function evaluation, stable and
// inverse-stable draws, process sampling, and the numeric conjugate.

#include <benchmark/benchmark.h>

#include <vector>

#include "levymd/mittag_leffler.hpp"
#include "levymd/processes.hpp"
#include "levymd/random.hpp"
#include "levymd/rate_functions.hpp"
#include "levymd/subordinators.hpp"

using namespace levymd;

namespace {

void bm_ml_series(benchmark::State& state) {
    const MLOrder alpha{0.6};
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mittag_leffler(alpha, x));
        x = x < 20.0 ? x + 0.01 : 0.1;
    }
}
BENCHMARK(bm_ml_series);

void bm_ml_asymptotic(benchmark::State& state) {
    const MLOrder alpha{0.6};
    double x = 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mittag_leffler_log(alpha, x));
        x = x < 400.0 ? x + 0.5 : 100.0;
    }
}
BENCHMARK(bm_ml_asymptotic);

void bm_stable_draw(benchmark::State& state) {
    RandomStream rng(1, 0);
    const StableIndex nu(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(sample_stable_unit(nu, rng));
}
BENCHMARK(bm_stable_draw);

void bm_inverse_stable_draw(benchmark::State& state) {
    RandomStream rng(2, 0);
    const StableIndex nu(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(sample_inverse_stable(nu, 100.0, rng));
}
BENCHMARK(bm_inverse_stable_draw);

void bm_sample_process(benchmark::State& state) {
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0),
                                   CumulantModel::poisson(1.0)},
                                  {1.0, 1.0, 0.5},
                                  {0.5, 0.75, 0.6}};
    RandomStream rng(3, 0);
    for (auto _ : state) benchmark::DoNotOptimize(sample_cond1(cfg, 100.0, rng));
}
BENCHMARK(bm_sample_process);

void bm_conjugate_2d(benchmark::State& state) {
    const Condition1Config cfg = {{CumulantModel::brownian_drift(0.0, 1.0),
                                   CumulantModel::brownian_drift(0.0, 2.0)},
                                  {0.5, 1.0, 2.0},
                                  {0.3, 0.5, 0.6}};
    const MeanVector zero = {{0.0, 0.0}, true};
    const auto f = make_psi_tilde(cfg, zero);
    const std::vector<double> x = {0.7, -0.4};
    for (auto _ : state) benchmark::DoNotOptimize(conjugate(f, x, ConjugateOptions::boxed(f)).value);
}
BENCHMARK(bm_conjugate_2d);

}  // namespace

BENCHMARK_MAIN();
