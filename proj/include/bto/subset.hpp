#pragma once

// Subsets of the ground set [n] = {1,...,n}, stored as bitmasks.
// Element i is present iff bit i-1 is set.

#include <bit>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bto {

inline constexpr int kMaxGroundSize = 16;

using Mask = std::uint32_t;

/// Bitmask with the low n bits set, i.e. the full ground set [n].
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  /// Builds a subset from 1-based element labels.
  static Subset of(std::initializer_list<int> elements) {
    Mask m = 0;
    for (int e : elements) m |= Mask{1} << (e - 1);
    return Subset(m);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int element) const { return (bits_ >> (element - 1)) & 1U; }
  constexpr bool disjoint(Subset o) const { return (bits_ & o.bits_) == 0; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool fits(int n) const { return (bits_ & ~full_mask(n)) == 0; }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const Subset&) const = default;

  /// Elements in increasing order, 1-based.
  std::vector<int> elements() const;

  /// `1,3,4` for nonempty subsets, `-` for the empty set.
  std::string to_string() const;

  /// Inverse of to_string. Throws std::invalid_argument on bad syntax,
  /// repeated or non-increasing elements, or elements outside [1, max_element].
  static Subset parse(std::string_view text, int max_element = kMaxGroundSize);

 private:
  Mask bits_ = 0;
};

/// [n] \ s
constexpr Subset complement(Subset s, int n) { return Subset(full_mask(n) & ~s.bits()); }

/// Iterates over every submask of `mask`, including 0 and `mask` itself.
template <class F>
void for_each_submask(Mask mask, F&& f) {
  Mask sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

/// A strict comparison `left < right` between disjoint subsets.
struct DisjointPair {
  Subset left;
  Subset right;

  bool valid() const { return left.disjoint(right) && !(left.empty() && right.empty()); }
  DisjointPair reversed() const { return {right, left}; }
  auto operator<=>(const DisjointPair&) const = default;

  /// `4<1,2`; the empty side is written `-`.
  std::string to_string() const;
  /// Parses `A<B`. Throws std::invalid_argument; with allow_empty == false
  /// an empty side is rejected.
  static DisjointPair parse(std::string_view text, bool allow_empty = true);
};

}  // namespace bto
