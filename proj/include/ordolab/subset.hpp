#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ordolab {

// Fixed-capacity bit-set over ground elements 0..kCapacity-1.
//
// Exact solvers work on grounds of at most 63 elements and address subsets by
// their low machine word; approximation paths accept up to kCapacity elements.
class Subset {
 public:
  static constexpr std::size_t kCapacity = 256;
  static constexpr std::size_t kWords = kCapacity / 64;

  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements);

  static Subset from_mask(std::uint64_t mask);
  static Subset full(std::size_t size);
  static Subset from_elements(const std::vector<int>& elements);

  bool contains(int element) const {
    return (words_[static_cast<std::size_t>(element) >> 6] >>
            (static_cast<std::size_t>(element) & 63)) &
           1U;
  }
  void insert(int element) {
    words_[static_cast<std::size_t>(element) >> 6] |=
        std::uint64_t{1} << (static_cast<std::size_t>(element) & 63);
  }
  void erase(int element) {
    words_[static_cast<std::size_t>(element) >> 6] &=
        ~(std::uint64_t{1} << (static_cast<std::size_t>(element) & 63));
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Low 64 elements as a mask. Only meaningful for grounds below 64.
  std::uint64_t mask() const { return words_[0]; }

  bool is_subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  bool intersects(const Subset& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  // Largest element + 1, or 0 when empty.
  std::size_t extent() const;

  std::vector<int> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        fn(static_cast<int>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  Subset& operator|=(const Subset& other) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Subset& operator&=(const Subset& other) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Subset& operator-=(const Subset& other) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace ordolab
