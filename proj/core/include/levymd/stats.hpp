#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace levymd {

// Monte Carlo estimate with its standard error.
struct McEstimate {
    std::size_t n;
    double mean;
    double se;
};

// Streaming mean/variance accumulator.  Merging partials in a fixed order
// keeps parallel reductions deterministic.
class MeanAccumulator {
  public:
    void add(double x);
    void merge(const MeanAccumulator& other);
    [[nodiscard]] McEstimate finish() const;

  private:
    std::size_t n_ = 0;
    double sum_ = 0.0;
    double sum_sq_ = 0.0;
};

// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
[[nodiscard]] double ks_statistic(std::vector<double> a, std::vector<double> b);

// Rejection threshold for the two-sample test at the given significance
// level (asymptotic Smirnov form).
[[nodiscard]] double ks_critical(double significance, std::size_t n, std::size_t m);

}  // namespace levymd
