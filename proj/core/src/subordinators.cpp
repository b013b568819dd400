#include "levymd/subordinators.hpp"

#include <cmath>
#include <stdexcept>

namespace levymd {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

StableIndex::StableIndex(double n) : value(n) {
    if (!(n > 0.0) || !(n < 1.0)) {
        throw std::domain_error("StableIndex: nu must lie in (0, 1)");
    }
}

double sample_stable_unit(StableIndex nu, RandomStream& rng) {
    const double v = nu.value;
    const double u = kPi * rng.uniform01();
    const double e = rng.exponential();
    const double r = (1.0 - v) / v;
    const double log_s = std::log(std::sin(v * u)) + r * std::log(std::sin((1.0 - v) * u)) -
                         std::log(std::sin(u)) / v - r * std::log(e);
    return std::exp(log_s);
}

double sample_inverse_stable(StableIndex nu, double t, RandomStream& rng) {
    if (!(t >= 0.0)) throw std::domain_error("sample_inverse_stable: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double s = sample_stable_unit(nu, rng);
    return std::pow(t / s, nu.value);
}

double inverse_stable_mgf(StableIndex nu, double theta, double t) {
    if (!(t >= 0.0)) throw std::domain_error("inverse_stable_mgf: t must be >= 0");
    return mittag_leffler(nu.ml_order(), theta * std::pow(t, nu.value));
}

}  // namespace levymd
