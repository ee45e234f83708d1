#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace prosite {

inline constexpr int kMaxElements = 64;

// A subset of ids 0..63, one bit per id. Every carrier in the library (proset
// elements, frame points, ring elements, model objects) is bounded by 64, so
// a single machine word is the whole representation.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElemSet single(int i) { return ElemSet(std::uint64_t{1} << i); }
  static constexpr ElemSet full(int n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElemSet o) const { return (bits_ & o.bits_) != 0; }
  // Lowest id in the set; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr ElemSet operator-(ElemSet o) const { return ElemSet(bits_ & ~o.bits_); }
  constexpr ElemSet operator^(ElemSet o) const { return ElemSet(bits_ ^ o.bits_); }
  constexpr ElemSet& operator|=(ElemSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElemSet& operator&=(ElemSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElemSet& operator-=(ElemSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ElemSet&) const = default;
  constexpr auto operator<=>(const ElemSet&) const = default;

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i : *this) out.push_back(i);
    return out;
  }

  // Little-endian over ids: character k is '1' iff id k is present.
  std::string to_string(int n) const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
      if (contains(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  static ElemSet from_string(const std::string& s) {
    ElemSet out;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == '1') out.insert(static_cast<int>(i));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct ElemSetHash {
  std::size_t operator()(ElemSet s) const { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace prosite
