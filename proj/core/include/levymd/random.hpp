#pragma once

#include <cstdint>
#include <random>

namespace levymd {

// Deterministic RNG stream.  Identical (seed, stream) pairs reproduce the
// identical draw sequence; Monte Carlo replicas map replica index -> stream,
// which keeps results byte-identical under any thread partitioning.
//
// All samplers are implemented here (rather than via std::*_distribution)
// so the draw sequence does not depend on the standard library version.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_bits();

    // Uniform on the open interval (0, 1); safe under log().
    double uniform01();
    // Standard exponential.
    double exponential();
    // Standard normal via Box-Muller (no cached second value).
    double normal();
    // Poisson with the given mean (mean >= 0), exact for any mean.
    std::uint64_t poisson(double mean);
    // Gamma with given shape > 0 and scale > 0 (Marsaglia-Tsang).
    double gamma(double shape, double scale);

  private:
    std::mt19937_64 engine_;
};

}  // namespace levymd
