#include "levymd/random.hpp"

#include <cmath>
#include <stdexcept>

namespace levymd {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
    // Mix (seed, stream) so that nearby stream ids yield unrelated states.
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL;
    std::uint64_t b = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
}

std::uint64_t RandomStream::next_bits() { return engine_(); }

double RandomStream::uniform01() {
    // 53 random bits, centered: never returns 0 or 1.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::exponential() { return -std::log(uniform01()); }

double RandomStream::normal() {
    const double u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * v);
}

std::uint64_t RandomStream::poisson(double mean) {
    if (!(mean >= 0.0)) throw std::domain_error("poisson: mean must be >= 0");
    std::uint64_t total = 0;
    // Additivity: split large means into chunks where exp(-chunk) is well
    // above the underflow threshold, then count with Knuth's product method.
    while (mean > 0.0) {
        const double chunk = mean > 25.0 ? 25.0 : mean;
        mean -= chunk;
        const double limit = std::exp(-chunk);
        double prod = uniform01();
        while (prod > limit) {
            ++total;
            prod *= uniform01();
        }
    }
    return total;
}

double RandomStream::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0)) {
        throw std::domain_error("gamma: shape and scale must be positive");
    }
    // Marsaglia-Tsang squeeze; shape < 1 boosted via the U^(1/shape) trick.
    double boost = 1.0;
    double k = shape;
    if (k < 1.0) {
        boost = std::pow(uniform01(), 1.0 / k);
        k += 1.0;
    }
    const double d = k - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double z, v;
        do {
            z = normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * z * z * z * z) return boost * d * v * scale;
        if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return boost * d * v * scale;
    }
}

}  // namespace levymd
