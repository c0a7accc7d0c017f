#pragma once

// Total orders on the subsets of [n] and the boolean term order axioms:
//   1. the empty set is the minimum;
//   2. a < b implies a|c < b|c whenever c is disjoint from a|b.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bto/subset.hpp"

namespace bto {

/// Raised when an operation requires a valid boolean term order.
class InvalidOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A total order on the 2^n subsets of [n], held both as a rank table
/// (mask -> position) and as the sequence (position -> mask).
///
/// Construction only guarantees a bijection; the term order axioms are
/// checked by validate().
class TermOrder {
 public:
  using Index = std::uint16_t;

  TermOrder() = default;

  /// Subsets listed in increasing order. Throws std::invalid_argument unless
  /// `sequence` is a permutation of all subsets of [n].
  static TermOrder from_sequence(int n, std::span<const Subset> sequence);
  static TermOrder from_masks(int n, std::span<const Mask> sequence);
  /// Throws std::invalid_argument unless `rank` is a permutation of 0..2^n-1.
  static TermOrder from_ranks(int n, std::span<const std::uint32_t> rank);

  int n() const { return n_; }
  std::size_t size() const { return seq_.size(); }

  std::uint32_t rank(Subset s) const { return rank_[s.bits()]; }
  std::uint32_t rank(Mask m) const { return rank_[m]; }
  Subset at(std::size_t position) const { return Subset(seq_[position]); }
  bool precedes(Subset a, Subset b) const { return rank_[a.bits()] < rank_[b.bits()]; }

  std::span<const Index> ranks() const { return rank_; }
  std::span<const Index> sequence() const { return seq_; }

  /// Applies the relabeling element i -> perm[i-1] (perm is a permutation of 1..n).
  TermOrder relabel(std::span<const int> perm) const;

  /// Keeps the subsets of [n-1] in their relative order.
  TermOrder restrict_to_prefix() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.n_ == b.n_ && a.seq_ == b.seq_;
  }
  friend bool operator<(const TermOrder& a, const TermOrder& b);

  std::size_t hash() const;

 private:
  TermOrder(int n, std::vector<Index> seq);

  int n_ = 0;
  std::vector<Index> seq_{0};
  std::vector<Index> rank_{0};
};

/// Builds an order from its first 2^(n-1) subsets; the second half is the
/// complement of the first in reverse, as every boolean term order requires.
TermOrder complete_by_complement(int n, std::span<const Subset> first_half);

struct Violation {
  enum class Kind { empty_not_first, union_not_preserved };
  Kind kind;
  // For union_not_preserved: alpha < beta but beta|gamma < alpha|gamma.
  // For empty_not_first: alpha is a subset ranked below the empty set.
  Subset alpha, beta, gamma;

  std::string describe() const;
};

struct ValidationReport {
  enum class Status { ok, malformed, violates_axioms };
  Status status = Status::ok;
  std::string malformed_reason;
  std::vector<Violation> violations;

  bool ok() const { return status == Status::ok; }
};

/// Checks both axioms over all 4^n pairwise-disjoint triples.
ValidationReport validate(const TermOrder& order);

/// Same, starting from a raw rank array so that wrong lengths and
/// non-permutations are reported as `malformed`.
ValidationReport validate_ranks(int n, std::span<const std::uint32_t> rank);

bool is_valid(const TermOrder& order);

/// Lexicographically least rank array over all n! relabelings. Throws
/// InvalidOrder if the order fails validation.
TermOrder canonicalize(const TermOrder& order);

/// Canonical form without the validity check. The lexicographic minimum is the
/// relabeling that lists the singletons as {1} < {2} < ... < {n}.
TermOrder canonical_form(const TermOrder& order);

/// True if the singletons appear as {1} < {2} < ... < {n}.
bool is_canonical(const TermOrder& order);

/// The order of subsets by binary value, induced by weights (1, 2, 4, ...).
TermOrder binary_order(int n);

struct TermOrderHash {
  std::size_t operator()(const TermOrder& o) const { return o.hash(); }
};

/// Calls f(perm) for each of the n! permutations of 1..n, in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    f(std::span<const int>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace bto
