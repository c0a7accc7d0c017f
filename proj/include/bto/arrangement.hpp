#pragma once

// The arrangement H_n of all hyperplanes through the origin with normals in
// {0,1,-1}^n, and its characteristic polynomial.
//
// chi(q) for a prime q of good reduction is the number of points of F_q^n
// lying on no hyperplane, i.e. whose 2^n subset sums are pairwise distinct.
// Counting at n+1 such primes and interpolating gives chi exactly; one more
// prime cross-checks the result. The intersection-lattice Moebius function is
// an independent route for small n.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bto {

/// A {0,+1,-1} normal vector whose first nonzero entry is +1.
struct Normal {
  std::vector<int> entries;
  auto operator<=>(const Normal&) const = default;
  std::string to_string() const;  ///< e.g. `+-0`
};

/// All (3^n - 1)/2 sign-canonical normals, ordered by their base-3 code.
std::vector<Normal> normals(int n);

/// The root system B_n in the fixed order e_1..e_n, then e_i+e_j (i<j)
/// lexicographically, then e_i-e_j (i<j) lexicographically.
std::vector<std::vector<int>> root_system(int n);

class ArrangementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> ascending);
  /// Product of (x - r) over the roots.
  static Polynomial from_roots(const std::vector<long>& roots);
  Polynomial operator*(const Polynomial& o) const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class evaluate(const mpz_class& x) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Descending degree with explicit signs: `x^2 - 4x + 3`.
  std::string to_string() const;
  /// Integer roots with multiplicity, ascending.
  std::vector<long> integer_roots() const;
  /// `(x-1)(x-3)`, with any leftover factor of degree >= 2 as `(x^2-60x+971)`.
  std::string factored() const;

 private:
  std::vector<mpz_class> coeffs_;
};

struct CharPolyResult {
  Polynomial poly;
  std::vector<std::uint64_t> primes;  ///< interpolation primes then the check prime
  std::vector<std::uint64_t> counts;  ///< point counts at those primes
};

/// Points of F_q^n with pairwise distinct subset sums.
std::uint64_t count_generic_points(int n, std::uint64_t q, unsigned threads = 1);

/// The n+2 smallest primes above max(2n, n^(n/2)); every minor of a
/// {0,+1,-1} matrix of size <= n is nonzero modulo them.
std::vector<std::uint64_t> reduction_primes(int n);

/// Finite-field route. Throws ArrangementError when the check prime disagrees
/// or the interpolant is not a monic integer polynomial.
CharPolyResult char_poly(int n, unsigned threads = 1);

/// Moebius-function route over the intersection lattice. Practical for n <= 4.
Polynomial char_poly_mobius(int n);

/// |chi(-1)|, the number of regions.
mpz_class region_count(int n, unsigned threads = 1);
mpz_class region_count(const Polynomial& chi);

/// The spanning set {e_i : i in Z} + {e_i - e_j : i,j in P} +
/// {e_i - e_j : i,j in N} + {e_i + e_j : i in P, j in N} of the hyperplane
/// with the given normal, where P, N, Z are the positive, negative and zero
/// coordinates.
std::vector<std::vector<int>> hyperplane_spanning_roots(const Normal& normal);

struct DiscriminantalReport {
  bool ok = true;
  std::size_t normals_checked = 0;
  std::size_t spanning_sets_checked = 0;  ///< independent (n-1)-subsets of B_n
  std::string failure;
};

/// Both inclusions: each normal's hyperplane is spanned by roots, and each
/// hyperplane spanned by n-1 independent roots has a {0,+1,-1} normal.
DiscriminantalReport verify_discriminantal(int n);

/// Exact rank of an integer matrix given by rows.
int integer_rank(const std::vector<std::vector<int>>& rows);

}  // namespace bto
