#pragma once

#include <cstdint>

// Deterministic, splittable random number generation.
//
// The generator is SplitMix64: the state advances by the golden-ratio gamma
// 0x9e3779b97f4a7c15 and each output is the finalizer
//   z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
//   z ^= z >> 27; z *= 0x94d049bb133111eb;
//   z ^= z >> 31;
// applied to the advanced state. A (seed, stream) pair selects the initial
// state as mix(mix(seed) + stream), where mix is the same finalizer, so every
// per-trial stream is an independent, reproducible sequence.

namespace lcabp {

struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

class Rng {
  public:
    explicit Rng(RngSpec spec);

    std::uint64_t next_u64();
    // Uniform on [0, 1), 53-bit resolution.
    double next_unit();
    // Unbiased uniform integer on [0, bound); bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound);
    // Standard normal via Box-Muller; the paired sample is cached.
    double next_gaussian();
    bool next_bool();

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace lcabp
