#pragma once

#include <cstdint>

namespace rm3 {

/// SplitMix64 finalizer: a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive hash of two 64-bit words.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

/// Counter-based generator: output i is a pure function of (key, i), so any
/// position in the stream can be recomputed without replaying the prefix.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t at(std::uint64_t counter) const;
  std::uint64_t next() { return at(counter_++); }

  /// Unbiased integer in [0, bound); bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  /// Standard normal deviate (Box-Muller, cosine branch only).
  double normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rm3
