#pragma once

#include <cstdint>

namespace renyi {

struct Seed {
  std::uint64_t value = 0;
};

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent stream for trial `index`: a pure function of (seed, index), so
// trials can be generated in any order.
constexpr std::uint64_t substream(Seed seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed.value) ^ mix64(index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

// SplitMix64 generator. Every derived variate is computed here rather than by
// <random> distributions so that sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t state) noexcept : state_(state) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  // (0, 1).
  double uniform_open() noexcept { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) noexcept;
  // Standard normal, Marsaglia polar method.
  double normal() noexcept;

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace renyi
