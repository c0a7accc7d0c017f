#pragma once

// Sign vectors, the cocircuits of the oriented matroid of B_n, and the
// signature a (partial) term order induces on them.
//
// A nonzero X in {+,0,-}^n stands for the hyperplane "sum over X+ equals
// sum over X-". Its cocircuit lists the sign of X on each root of B_n.
// The order induces mu(X) = + if X- < X+, - if X+ < X-, and 0 if they tie.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bto/baues.hpp"
#include "bto/term_order.hpp"

namespace bto {

struct SignVector {
  Mask plus = 0;
  Mask minus = 0;

  static SignVector from_sets(Subset plus, Subset minus);
  /// `+-0`, length n.
  static SignVector parse(std::string_view text, int n);
  /// Inverse of index(): base-3 digits, coordinate 1 least significant,
  /// digit 1 for + and 2 for -.
  static SignVector from_index(std::uint32_t index, int n);

  bool zero() const { return (plus | minus) == 0; }
  int at(int i) const { return (plus >> (i - 1) & 1) ? 1 : (minus >> (i - 1) & 1) ? -1 : 0; }
  SignVector operator-() const { return {minus, plus}; }
  std::uint32_t index(int n) const;
  std::string to_string(int n) const;
  auto operator<=>(const SignVector&) const = default;
};

/// 3^n; signatures and cocircuit tables are indexed by SignVector::index.
std::uint32_t sign_vector_count(int n);

/// Signs over the n^2 roots of B_n: e_i, then e_i+e_j, then e_i-e_j, with
/// pairs in lexicographic order. Bit k of plus/minus is root k.
struct Cocircuit {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  std::string to_string(int n) const;  ///< `++0+++0++`
  auto operator<=>(const Cocircuit&) const = default;
};

/// Throws std::invalid_argument for the zero vector.
Cocircuit cocircuit(const SignVector& x, int n);

/// A value in {+1, 0, -1} for every nonzero sign vector.
class Signature {
 public:
  explicit Signature(int n = 1);
  int n() const { return n_; }
  int operator[](const SignVector& x) const { return values_[x.index(n_)]; }
  int at_index(std::uint32_t i) const { return values_[i]; }
  void set(const SignVector& x, int value) { values_[x.index(n_)] = static_cast<std::int8_t>(value); }
  /// Sets x to value and -x to -value.
  void set_antisymmetric(const SignVector& x, int value);
  bool operator==(const Signature&) const = default;

 private:
  int n_;
  std::vector<std::int8_t> values_;
};

Signature mu_from_order(const TermOrder& order);
Signature mu_from_order(const PartialTermOrder& order);

/// Raised when sigma(-X) != -sigma(X).
class AntisymmetryError : public std::invalid_argument {
 public:
  explicit AntisymmetryError(const std::string& what) : std::invalid_argument(what) {}
};

struct EliminationFailure {
  SignVector x, y;
  int root = 0;  ///< 0-based index into B_n where X is + and Y is -
};

struct LocalizationResult {
  bool ok = true;
  std::optional<EliminationFailure> failure;
};

/// Weak cocircuit elimination for sigma^{-1}({+,0}), searching every nonzero
/// sign vector as a candidate. Throws AntisymmetryError.
LocalizationResult check_localization(const Signature& sigma);

/// The candidates built from the decomposition X- = a|m|x, X+ = b|p|y,
/// Y- = c|m|y, Y+ = d|p|x, empty ones dropped.
std::vector<SignVector> elimination_candidates(const SignVector& x, const SignVector& y);

/// Z is an elimination candidate for X and Y: every + of Z's cocircuit is a +
/// of X's or Y's, and likewise for -.
bool is_elimination_candidate(const SignVector& z, const SignVector& x, const SignVector& y, int n);

struct MuCheck {
  int failed_condition = 0;  ///< 0 when all hold; 1 antisymmetry, 2 first addition, 3 second addition
  std::vector<SignVector> witness;  ///< x (and -x), or x, y, z
  bool ok() const { return failed_condition == 0; }
};

/// The composite z of the addition conditions, or nullopt when x and y are
/// not compatible (x_i == y_i for some i in the support of x).
std::optional<SignVector> addition_composite(const SignVector& x, const SignVector& y);

MuCheck check_mu_conditions(const Signature& mu);

/// Compares subsets after removing their intersection. Throws
/// std::invalid_argument if mu does not describe an ordered partition.
PartialTermOrder partial_order_from_mu(const Signature& mu);

/// One line per sign vector whose first nonzero entry is +: `++0 +`.
std::string format_signature(const Signature& sigma);
/// Lines `<signs> <value>`; any nonzero sign vector may be listed, its
/// negative is filled in. Every pair must be covered, without conflicts.
Signature parse_signature(std::string_view text);

}  // namespace bto
