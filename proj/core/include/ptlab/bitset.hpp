#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ptlab {

/// Fixed-width dynamic bitset used for adjacency rows and vertex sets.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t bits)
      : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return bits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void set_all() noexcept;
  void reset_all() noexcept;

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// Index of the first set bit at position >= from, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  Bitset& operator^=(const Bitset& other) noexcept;
  /// this &= ~other
  Bitset& subtract(const Bitset& other) noexcept;
  /// Complement within size(); padding bits stay clear.
  Bitset complemented() const;

  /// popcount(this & other) without materialising the intersection.
  std::size_t intersection_count(const Bitset& other) const noexcept;
  /// popcount(this & other & ~minus).
  std::size_t intersection_count_excluding(const Bitset& other,
                                           const Bitset& minus) const noexcept;
  bool intersects(const Bitset& other) const noexcept;

  std::vector<std::size_t> to_indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

 private:
  void clear_padding() noexcept;

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace ptlab
