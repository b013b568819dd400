#include "levymd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levymd {

void MeanAccumulator::add(double x) {
    ++n_;
    sum_ += x;
    sum_sq_ += x * x;
}

void MeanAccumulator::merge(const MeanAccumulator& other) {
    n_ += other.n_;
    sum_ += other.sum_;
    sum_sq_ += other.sum_sq_;
}

McEstimate MeanAccumulator::finish() const {
    if (n_ == 0) return {0, 0.0, 0.0};
    const double mean = sum_ / static_cast<double>(n_);
    const double var = std::max(0.0, sum_sq_ / static_cast<double>(n_) - mean * mean);
    const double se = n_ > 1 ? std::sqrt(var / static_cast<double>(n_ - 1)) : 0.0;
    return {n_, mean, se};
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i; else ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical(double significance, std::size_t n, std::size_t m) {
    if (!(significance > 0.0 && significance < 1.0)) {
        throw std::invalid_argument("ks_critical: significance outside (0, 1)");
    }
    const double c = std::sqrt(-0.5 * std::log(0.5 * significance));
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return c * std::sqrt((nn + mm) / (nn * mm));
}

}  // namespace levymd
