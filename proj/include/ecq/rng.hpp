#pragma once

#include <cstdint>

namespace ecq {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic 64-bit stream (splitmix64). Small state, fully portable,
/// good enough for annealing and multi-start initialization.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, k). Modulo bias is irrelevant at our scales and keeps
    /// the draw count per call fixed, which the determinism contract relies on.
    std::uint64_t below(std::uint64_t k) { return next_u64() % k; }

  private:
    std::uint64_t state_;
};

/// Stream seed for worker k (annealing read, restart, ...) derived from a
/// master seed: seed_k = splitmix64(master + (k+1) * golden_gamma).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    return splitmix64_mix(master + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace ecq
