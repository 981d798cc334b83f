#include "ptlab/rng.hpp"

namespace ptlab {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

RngStream::RngStream(std::uint64_t seed) noexcept : key_(mix64(seed ^ kGolden)) {}

RngStream::result_type RngStream::operator()() noexcept {
  const std::uint64_t c = counter_++;
  return mix64(key_ + (c + 1) * kGolden);
}

RngStream RngStream::split(std::uint64_t index) const noexcept {
  const std::uint64_t child = mix64(mix64(key_ ^ 0xD6E8FEB86659FD93ULL) + mix64(index + kGolden));
  return RngStream(child, 0, 0);
}

std::uint64_t RngStream::below(std::uint64_t bound) noexcept {
  // Lemire's nearly divisionless rejection method.
  std::uint64_t x = (*this)();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

}  // namespace ptlab
