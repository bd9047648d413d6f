#pragma once

// Reproducible randomness for the trial harness.
//
// Trial t of a run with seed s draws from std::mt19937_64 seeded with
// substream_seed(s, t), the (t+1)-th SplitMix64 output from state s. Bounded
// draws use rejection sampling rather than std::uniform_int_distribution, whose
// output differs between standard libraries. A report is therefore a function
// of (n, h, trials, seed) alone, whatever the worker count.

#include <cstdint>
#include <random>

namespace hqx {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64_mix(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t index) : engine_(substream_seed(seed, index)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hqx
