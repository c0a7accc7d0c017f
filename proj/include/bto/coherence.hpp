#pragma once

// Coherence: an order is coherent when some positive weight vector w sorts
// the subsets by their sums. The decision is an exact rational LP over the
// 2^n - 1 consecutive comparisons of the order:
//
//   find w  with  w(b) - w(a) >= 1  for every consecutive pair (a, b),
//
// reduced to disjoint sides. By Farkas' lemma it is infeasible exactly when
// a nonnegative combination of the comparisons cancels elementwise, which is
// a noncoherence certificate: adding up all the left sides and all the right
// sides gives the same multiset, so a weight order would make it strictly
// smaller than itself.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bto/term_order.hpp"

namespace bto {

using Rational = mpq_class;
using WeightVector = std::vector<Rational>;

struct CertificateTerm {
  DisjointPair pair;
  std::uint64_t multiplicity = 1;
  auto operator<=>(const CertificateTerm&) const = default;
};

struct Certificate {
  std::vector<CertificateTerm> terms;
};

/// Two subsets with the same weight.
class TieError : public std::invalid_argument {
 public:
  TieError(Subset first, Subset second)
      : std::invalid_argument("weights tie: " + first.to_string() + " and " + second.to_string() +
                              " have equal sums"),
        first_(first), second_(second) {}
  Subset first() const { return first_; }
  Subset second() const { return second_; }

 private:
  Subset first_, second_;
};

struct CoherenceResult {
  bool coherent = false;
  WeightVector weights;     ///< positive integers, when coherent
  Certificate certificate;  ///< integer multiplicities, when incoherent
};

/// Solves the exact LP once and returns whichever side of the alternative
/// holds. Throws InvalidOrder for invalid orders.
CoherenceResult decide_coherence(const TermOrder& order);

/// A primitive positive integer weight vector inducing the order, or nullopt.
std::optional<WeightVector> find_weight(const TermOrder& order);

/// Throws std::invalid_argument if the order is coherent.
Certificate noncoherence_certificate(const TermOrder& order);

/// Sorts subsets by weight. Throws TieError on equal sums and
/// std::invalid_argument on nonpositive weights.
TermOrder order_from_weight(std::span<const Rational> weights);
TermOrder order_from_weight(std::span<const long> weights);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Both certificate conditions: every pair is a strict comparison of the
/// order, and the multiset of left elements equals that of right elements.
CertificateCheck verify_certificate(const TermOrder& order, const Certificate& certificate);

/// Number of relabeling classes of coherent orders on [n].
std::uint64_t count_coherent(int n, unsigned threads = 1);

/// `pair: 4 < 1,2 x1` per line.
std::string format_certificate(const Certificate& certificate);
/// Accepts the output of format_certificate and the short form `4<1,2`
/// (multiplicity 1). Blank and `#` lines are skipped.
Certificate parse_certificate(std::string_view text);

std::string format_weights(std::span<const Rational> weights);
/// Comma-separated positive integers or fractions: `7,10,16,20,22`.
WeightVector parse_weights(std::string_view text);

}  // namespace bto
