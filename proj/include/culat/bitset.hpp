#pragma once

#include <bit>
#include <compare>
#include <functional>
#include <cstdint>
#include <iterator>
#include <string>

namespace culat {

using Element = int;

// Fixed-width set of small non-negative integers (0..63).
class BitSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  static constexpr int kCapacity = 64;

  constexpr BitSet() = default;
  constexpr explicit BitSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr BitSet singleton(int i) { return BitSet(std::uint64_t{1} << i); }
  // {0, ..., n-1}
  static constexpr BitSet range(int n) {
    return BitSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest / largest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr int back() const { return 63 - std::countl_zero(bits_); }
  constexpr bool is_subset_of(BitSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr BitSet operator|(BitSet o) const { return BitSet(bits_ | o.bits_); }
  constexpr BitSet operator&(BitSet o) const { return BitSet(bits_ & o.bits_); }
  constexpr BitSet operator^(BitSet o) const { return BitSet(bits_ ^ o.bits_); }
  // set difference
  constexpr BitSet operator-(BitSet o) const { return BitSet(bits_ & ~o.bits_); }
  constexpr BitSet& operator|=(BitSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr BitSet& operator&=(BitSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr BitSet& operator-=(BitSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const BitSet&) const = default;
  constexpr auto operator<=>(const BitSet&) const = default;

  // "{0,3,5}"; `offset` shifts printed values (1 for one-based labels).
  std::string to_string(int offset = 0) const {
    std::string out = "{";
    bool first = true;
    for (int i : *this) {
      if (!first) out += ',';
      out += std::to_string(i + offset);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

using ElementSet = BitSet;
// Sets of join-irreducibles, indexed by position in the sorted list J(L).
using LabelSet = BitSet;

}  // namespace culat

template <>
struct std::hash<culat::BitSet> {
  std::size_t operator()(culat::BitSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
