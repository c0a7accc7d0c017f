#include "bto/rational_lp.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace bto::lp {

namespace {

// Dense tableau: columns [0, n) are the problem variables, [n, n+m) the
// artificials, and column n+m the right-hand side. Row `m` is the objective
// row holding reduced costs and, in the rhs column, minus the objective.
class Tableau {
 public:
  explicit Tableau(const StandardFormLp& p)
      : m_(p.b.size()), n_(p.c.empty() ? (p.a.empty() ? 0 : p.a.front().size()) : p.c.size()),
        rows_(m_ + 1, Vector(n_ + m_ + 1)), basis_(m_), sign_(m_, 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.a[i].size() != n_) throw std::invalid_argument("lp: ragged constraint matrix");
      sign_[i] = p.b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign_[i] * p.a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][rhs()] = sign_[i] * p.b[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase I: minimize the sum of artificials.
  bool phase_one() {
    set_costs([&](std::size_t j) { return j >= n_ && j < n_ + m_ ? Rational(1) : Rational(0); });
    iterate();
    return objective() == 0;
  }

  // Phase II over the original columns only.
  bool phase_two(const Vector& c) {
    drive_out_artificials();
    set_costs([&](std::size_t j) { return j < n_ && !c.empty() ? c[j] : Rational(0); });
    return iterate();
  }

  Rational objective() const { return -rows_[m_][rhs()]; }

  Vector primal() const {
    Vector x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][rhs()];
    return x;
  }

  // y = c_B^T B^{-1}, read off the artificial columns and mapped back to the
  // caller's row signs.
  Vector dual(bool phase_one_costs) const {
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cost = phase_one_costs ? Rational(1) : Rational(0);
      y[i] = sign_[i] * (cost - rows_[m_][n_ + i]);
    }
    return y;
  }

 private:
  std::size_t rhs() const { return n_ + m_; }

  template <class CostFn>
  void set_costs(CostFn cost) {
    costs_.assign(n_ + m_, Rational(0));
    for (std::size_t j = 0; j < n_ + m_; ++j) costs_[j] = cost(j);
    Vector& z = rows_[m_];
    for (std::size_t j = 0; j <= rhs(); ++j) z[j] = j < n_ + m_ ? costs_[j] : Rational(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = costs_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= rhs(); ++j) z[j] -= cb * rows_[i][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / rows_[row][col];
    for (auto& v : rows_[row]) v *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rational f = rows_[i][col];
      for (std::size_t j = 0; j <= rhs(); ++j)
        if (rows_[row][j] != 0) rows_[i][j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  // Bland's rule; artificials never re-enter. Returns false if unbounded.
  bool iterate() {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[m_][j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = rows_[i][*entering];
        if (a <= 0) continue;
        Rational ratio = rows_[i][rhs()] / a;
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t m_, n_;
  Matrix rows_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
  Vector costs_;
};

}  // namespace

Solution solve(const StandardFormLp& problem) {
  if (problem.a.size() != problem.b.size()) throw std::invalid_argument("lp: row count mismatch");
  Tableau t(problem);
  Solution s;
  if (!t.phase_one()) {
    s.status = Status::infeasible;
    s.farkas = t.dual(true);
    return s;
  }
  if (!t.phase_two(problem.c)) {
    s.status = Status::unbounded;
    return s;
  }
  s.status = Status::optimal;
  s.x = t.primal();
  s.objective = t.objective();
  s.dual = t.dual(false);
  return s;
}

}  // namespace bto::lp
