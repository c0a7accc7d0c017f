#pragma once

// Exact linear programming over the rationals (GMP).
//
//   minimize    c^T x
//   subject to  A x = b,  x >= 0
//
// Two-phase primal simplex on a dense tableau with Bland's rule, so it
// terminates on degenerate problems. Every pivot is exact.

#include <gmpxx.h>

#include <vector>

namespace bto::lp {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

struct StandardFormLp {
  Matrix a;  ///< m rows, each of length equal to c.size()
  Vector b;  ///< m entries, any sign
  Vector c;  ///< objective coefficients; empty means pure feasibility
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Vector x;          ///< primal point (optimal)
  Rational objective;
  Vector dual;       ///< y with A^T y <= c and b^T y = objective (optimal)
  /// When infeasible: y with A^T y <= 0 and b^T y > 0, a Farkas certificate.
  Vector farkas;
};

Solution solve(const StandardFormLp& problem);

}  // namespace bto::lp
