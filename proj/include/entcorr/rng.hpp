#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace entcorr {

/// SplitMix64 finalizer. Used to expand seeds and to hash stream indices.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix64(std::uint64_t value);

/// xoshiro256** (Blackman & Vigna), seeded through SplitMix64.
///
/// Satisfies UniformRandomBitGenerator so it plugs into <random> distributions.
/// Independent streams come from `Rng::stream(seed, index)`, which seeds with
/// `seed ^ mix64(index)`; the sampling harness derives one stream per sample index
/// so results do not depend on how samples are distributed over workers.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0x5eedULL);

  static Rng stream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace entcorr
