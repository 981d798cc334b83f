#pragma once

#include <cstdint>
#include <limits>

namespace ptlab {

/// Counter-based, splittable random stream.
///
/// Output i of a stream is a keyed hash of the counter value i, so a stream is
/// fully described by (key, counter). split(k) derives an independent child
/// key; trial k of a Monte-Carlo run always draws from split(k) no matter which
/// thread executes it. Satisfies UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Child stream with a key derived from (this key, index). Does not advance
  /// this stream.
  RngStream split(std::uint64_t index) const noexcept;

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Uniform double in [0, 1).
  double uniform() noexcept;
  bool bernoulli(double p) noexcept { return uniform() < p; }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  RngStream(std::uint64_t key, std::uint64_t counter, int) noexcept
      : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finaliser; exposed for deterministic hashing in tests and tools.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace ptlab
