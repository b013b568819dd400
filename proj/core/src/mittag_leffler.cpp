#include "levymd/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "levymd/special_functions.hpp"

namespace levymd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// exp(s) stays representable up to s ~ 709; past this the value branch of
// E_alpha(x), x > 0, cannot be returned as a double.
constexpr double kOverflowExponent = 700.0;

[[nodiscard]] double exponent_scale(double alpha, double x) {
    return std::pow(std::abs(x), 1.0 / alpha);
}

}  // namespace

MLOrder::MLOrder(double a) : value(a) {
    if (!(a > 0.0) || a > 1.0) {
        throw std::domain_error("MLOrder: alpha must lie in (0, 1]");
    }
}

namespace detail {

double ml_series(double alpha, double x) {
    if (x == 0.0) return 1.0;
    const double logax = std::log(std::abs(x));
    const bool negative = x < 0.0;

    // Kahan-compensated sum of exp(k log|x| - lgamma(alpha k + 1)), signed.
    double sum = 0.0, comp = 0.0;
    double prev_mag = kInf;
    constexpr int kMaxTerms = 2000;
    for (int k = 0; k < kMaxTerms; ++k) {
        const double mag = std::exp(k * logax - lgamma_pos(alpha * k + 1.0));
        const double term = (negative && (k & 1)) ? -mag : mag;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        // Stop once past the hump and the tail no longer moves the sum.
        if (mag < prev_mag && mag <= 1e-17 * (std::abs(sum) + 1.0)) break;
        prev_mag = mag;
    }
    return sum;
}

double ml_asymptotic_log_pos(double alpha, double x) {
    const double s = std::pow(x, 1.0 / alpha);
    // E_alpha(x) = exp(s)/alpha - sum_{k>=1} x^{-k}/Gamma(1 - alpha k) + ...
    double corr = 0.0;
    const double p = 1.0 / x;
    double pk = 1.0;
    double prev_mag = kInf;
    for (int k = 1; k <= 60; ++k) {
        pk *= p;
        const double term = pk * rgamma(1.0 - alpha * k);
        const double mag = std::abs(term);
        if (mag > prev_mag) break;  // asymptotic tail started to diverge
        corr += term;
        prev_mag = mag;
        if (mag <= 1e-18) break;
    }
    const double damp = s > 745.0 ? 0.0 : std::exp(-s);
    return s - std::log(alpha) + std::log1p(-alpha * damp * corr);
}

double ml_asymptotic_neg(double alpha, double x) {
    // E_alpha(x) = -sum_{k>=1} x^{-k}/Gamma(1 - alpha k) + O(|x|^{-K-1}),
    // truncated where the term envelope turns.  The envelope (reflection
    // bound Gamma(alpha k)/pi |x|^k) is used instead of the terms themselves
    // because 1/Gamma(1 - alpha k) has spurious zeros whenever alpha k lands
    // on an integer.
    const double la = std::log(std::abs(x));
    const double p = 1.0 / x;
    double pk = 1.0;
    double sum = 0.0;
    double prev_env = kInf;
    for (int k = 1; k <= 60; ++k) {
        pk *= p;
        const double env = std::exp(lgamma_pos(alpha * k) - k * la) / M_PI;
        if (env > prev_env) break;
        sum += -pk * rgamma(1.0 - alpha * k);
        prev_env = env;
        if (env <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double ml_spectral_neg(double alpha, double x) {
    // Complete monotonicity gives, for t = -x > 0 and tau = t^(1/alpha),
    //   E_alpha(-t) = (sin(pi alpha)/pi) int_0^inf e^{-r tau}
    //                 r^{alpha-1} / (r^{2 alpha} + 2 r^alpha cos(pi alpha) + 1) dr.
    // (Check: int of the density is 1 at t = 0, and the r -> 0 behaviour
    // reproduces the 1/(Gamma(1-alpha) t) tail via the reflection formula.)
    // On the log axis v = log(r tau) this becomes
    //   (sin(pi alpha)/pi) int_R e^{-e^v}
    //       / (4 (sinh^2((alpha v - log t) / 2) + cos^2(pi alpha / 2))) dv,
    // a positive integrand (no cancellation), analytic in a strip, so the
    // trapezoid rule converges geometrically.  The shift by log t keeps every
    // intermediate representable for arbitrarily large |x|.
    const double t = -x;
    const double log_t = std::log(t);
    // sin(pi alpha) and cos(pi alpha / 2) computed from whichever of alpha
    // and 1 - alpha is small, to keep them exact near both endpoints.
    const double sin_pa =
        alpha <= 0.5 ? std::sin(M_PI * alpha) : std::sin(M_PI * (1.0 - alpha));
    const double cos_half = alpha <= 0.5 ? std::cos(0.5 * M_PI * alpha)
                                         : std::sin(0.5 * M_PI * (1.0 - alpha));
    const double c2 = cos_half * cos_half;

    // Analyticity strip: density poles sit at Im v = pi (1 -+ alpha) / alpha
    // and exp(-e^v) starts growing past Im v = pi / 2.
    const double strip = 0.9 * std::min(0.5 * M_PI, M_PI * (1.0 - alpha) / alpha);
    const double h = 2.0 * M_PI * strip / 33.0;
    // Left tail decays like exp(alpha v - log t), right tail is exactly zero
    // once e^v exceeds the (negated) exponent range.
    const double v_lo = std::min(0.0, log_t / alpha) - 44.0 / alpha;
    const double v_hi = std::log(746.0);

    const auto n = static_cast<long>(std::ceil((v_hi - v_lo) / h));
    double sum = 0.0, comp = 0.0;
    for (long k = 0; k <= n; ++k) {
        const double v = v_lo + static_cast<double>(k) * h;
        const double w = std::exp(v);
        if (w > 745.0) continue;
        const double sh = std::sinh(0.5 * (alpha * v - log_t));
        double g = std::exp(-w) / (4.0 * (sh * sh + c2));
        if (k == 0 || k == n) g *= 0.5;
        const double y = g - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sin_pa / M_PI * h * sum;
}

}  // namespace detail

namespace {

// Value-space evaluation for the representable regime.
double ml_value(double alpha, double x) {
    if (alpha == 1.0) return std::exp(x);
    if (x < 0.0) {
        return x >= -kMlNegativeSwitch ? detail::ml_series(alpha, x)
                                       : detail::ml_spectral_neg(alpha, x);
    }
    const double s = exponent_scale(alpha, x);
    if (s <= kMlBlendLo) return detail::ml_series(alpha, x);
    const double asym = std::exp(detail::ml_asymptotic_log_pos(alpha, x));
    if (s >= kMlBlendHi) return asym;

    const double w = (s - kMlBlendLo) / (kMlBlendHi - kMlBlendLo);
    const double series = detail::ml_series(alpha, x);
    return (1.0 - w) * series + w * asym;
}

}  // namespace

double mittag_leffler(MLOrder order, double x) {
    if (!std::isfinite(x)) throw std::domain_error("mittag_leffler: x must be finite");
    if (x > 0.0 && order.value < 1.0 && exponent_scale(order.value, x) > kOverflowExponent) {
        throw std::domain_error("mittag_leffler: result overflows; use mittag_leffler_log");
    }
    if (order.value == 1.0 && x > kOverflowExponent) {
        throw std::domain_error("mittag_leffler: result overflows; use mittag_leffler_log");
    }
    return ml_value(order.value, x);
}

double mittag_leffler_log(MLOrder order, double x) {
    if (!std::isfinite(x)) throw std::domain_error("mittag_leffler_log: x must be finite");
    const double alpha = order.value;
    if (alpha == 1.0) return x;
    if (x > 0.0 && exponent_scale(alpha, x) > kOverflowExponent) {
        return detail::ml_asymptotic_log_pos(alpha, x);
    }
    return std::log(ml_value(alpha, x));
}

double ml_log_limit_kernel(MLOrder order, double y) {
    if (!std::isfinite(y)) throw std::domain_error("ml_log_limit_kernel: y must be finite");
    return y >= 0.0 ? std::pow(y, 1.0 / order.value) : 0.0;
}

}  // namespace levymd
