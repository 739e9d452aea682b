#pragma once

#include <cstdint>
#include <random>

namespace acind {

/// Deterministic random generator. Core stream is std::mt19937_64 (bit-exact
/// across platforms per the C++ standard); the derived distributions below are
/// implemented here rather than with std::*_distribution, whose output is
/// implementation-defined and would break cross-platform reproducibility.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0,1) using the top 53 bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n), rejection sampling to avoid modulo bias.
    uint64_t uniform_int(uint64_t n);

    /// Standard normal via Box-Muller (pairwise, cached).
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Stable sub-stream derivation so that independent components (embedding,
    /// layer init, noise) each get their own deterministic seed.
    static uint64_t derive_seed(uint64_t seed, uint64_t stream);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace acind
