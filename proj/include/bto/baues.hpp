#pragma once

// Generalized partial term orders and the refinement relation between them.
//
// Incomparable subsets of a generalized partial term order have identical up-
// and down-sets, so the order is an ordered partition of the subsets into
// levels. A subset precedes another exactly when its level is lower.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bto/coherence.hpp"
#include "bto/term_order.hpp"

namespace bto {

class PartialTermOrder {
 public:
  PartialTermOrder() = default;

  /// Levels indexed by subset mask; any integers, compressed to 0..k-1.
  static PartialTermOrder from_levels(int n, std::span<const int> level);
  /// One level per group, in increasing order. Every subset of [n] must occur once.
  static PartialTermOrder from_groups(int n, const std::vector<std::vector<Subset>>& groups);
  static PartialTermOrder from_order(const TermOrder& order);
  /// All subsets tied: the top element of the refinement poset.
  static PartialTermOrder trivial(int n);
  /// Levels are the distinct values of the subset sums of w, sorted.
  static PartialTermOrder from_weights(std::span<const Rational> weights);

  int n() const { return n_; }
  std::size_t size() const { return level_.size(); }
  int level(Subset s) const { return level_[s.bits()]; }
  int level(Mask m) const { return level_[m]; }
  int level_count() const { return levels_; }
  std::span<const int> levels() const { return level_; }
  bool precedes(Subset a, Subset b) const { return level(a) < level(b); }
  bool tied(Subset a, Subset b) const { return level(a) == level(b); }

  /// No two subsets share a level.
  bool is_total() const { return levels_ == static_cast<int>(level_.size()); }
  /// The empty set sits alone at the bottom.
  bool is_boolean() const;
  /// Throws std::logic_error unless is_total().
  TermOrder to_total() const;
  /// Subsets grouped by level.
  std::vector<std::vector<Subset>> groups() const;

  friend bool operator==(const PartialTermOrder&, const PartialTermOrder&) = default;

 private:
  int n_ = 0;
  int levels_ = 1;
  std::vector<int> level_{0};
};

struct PartialViolation {
  enum class Kind {
    translation,  ///< alpha vs beta compares differently from alpha|gamma vs beta|gamma
    exchange,     ///< a|c ~ b|d (or equal), b < a, but not c < d
  };
  Kind kind = Kind::translation;
  Subset a, b, c, d;  ///< for translation: alpha = a, beta = b, gamma = c
  std::string describe() const;
};

struct PartialValidation {
  std::vector<PartialViolation> violations;  ///< capped, see validate_partial
  bool ok() const { return violations.empty(); }
};

/// Checks the translation condition over all pairwise-disjoint triples and
/// the exchange form of the up/down-set condition over all a, b, c, d with
/// a & c = b & d = 0 and a|c, b|d on one level. Stops after `max_violations`.
PartialValidation validate_partial(const PartialTermOrder& p, std::size_t max_violations = 16);

/// True when every strict comparison of `coarse` holds in `fine`. Throws
/// std::invalid_argument if the ground sets differ.
bool refines(const PartialTermOrder& fine, const PartialTermOrder& coarse);

/// True when w = 0 is the only weight vector with w(b) >= w(a) for every
/// consecutive pair a < b of the order, i.e. the order lies below no coherent
/// partial order other than the trivial one. Throws InvalidOrder on invalid input.
bool coherent_above_only_trivial(const TermOrder& order);

/// Partial-order files: as order files, with `=` joining tied subsets.
PartialTermOrder parse_partial_order(std::string_view text);
std::string serialize_partial_order(const PartialTermOrder& p);

}  // namespace bto
