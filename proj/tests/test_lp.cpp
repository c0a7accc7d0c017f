#include <doctest.h>

#include <random>

#include "bto/rational_lp.hpp"

using namespace bto::lp;

namespace {

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// A^T y, column by column.
Vector transpose_times(const Matrix& a, const Vector& y) {
  Vector out(a.empty() ? 0 : a.front().size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += a[i][j] * y[i];
  return out;
}

void check_primal_feasible(const StandardFormLp& p, const Solution& s) {
  for (const auto& v : s.x) REQUIRE(v >= 0);
  for (std::size_t i = 0; i < p.a.size(); ++i) REQUIRE(dot(p.a[i], s.x) == p.b[i]);
}

void check_certificates(const StandardFormLp& p, const Solution& s) {
  if (s.status == Status::optimal) {
    check_primal_feasible(p, s);
    REQUIRE(dot(p.c, s.x) == s.objective);
    const Vector aty = transpose_times(p.a, s.dual);
    for (std::size_t j = 0; j < aty.size(); ++j) REQUIRE(aty[j] <= p.c[j]);
    REQUIRE(dot(p.b, s.dual) == s.objective);
  } else if (s.status == Status::infeasible) {
    const Vector aty = transpose_times(p.a, s.farkas);
    for (const auto& v : aty) REQUIRE(v <= 0);
    REQUIRE(dot(p.b, s.farkas) > 0);
  }
}

}  // namespace

TEST_CASE("small optimum") {
  // min -x1 - x2  s.t. x1 + 2 x2 + s1 = 4, 3 x1 + x2 + s2 = 6
  StandardFormLp p;
  p.a = {{1, 2, 1, 0}, {3, 1, 0, 1}};
  p.b = {4, 6};
  p.c = {-1, -1, 0, 0};
  const Solution s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == Rational(-14, 5));
  CHECK(s.x[0] == Rational(8, 5));
  CHECK(s.x[1] == Rational(6, 5));
  check_certificates(p, s);
}

TEST_CASE("infeasible system yields a Farkas vector") {
  // x1 + x2 = 1 and x1 + x2 = 2
  StandardFormLp p;
  p.a = {{1, 1}, {1, 1}};
  p.b = {1, 2};
  const Solution s = solve(p);
  REQUIRE(s.status == Status::infeasible);
  check_certificates(p, s);
}

TEST_CASE("negative right-hand sides") {
  // -x1 + x2 = -3, min x1  => x1 = 3
  StandardFormLp p;
  p.a = {{-1, 1}};
  p.b = {-3};
  p.c = {1, 0};
  const Solution s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == 3);
  check_certificates(p, s);
}

TEST_CASE("unbounded") {
  StandardFormLp p;
  p.a = {{1, -1}};
  p.b = {0};
  p.c = {-1, 0};
  CHECK(solve(p).status == Status::unbounded);
}

TEST_CASE("degenerate problem terminates") {
  // Beale's cycling example in standard form.
  StandardFormLp p;
  p.a = {{Rational(1, 4), -8, -1, 9, 1, 0, 0},
         {Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0},
         {0, 0, 1, 0, 0, 0, 1}};
  p.b = {0, 0, 1};
  p.c = {Rational(-3, 4), 20, Rational(-1, 2), 6, 0, 0, 0};
  const Solution s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == Rational(-5, 4));
  check_certificates(p, s);
}

TEST_CASE("redundant equality rows") {
  StandardFormLp p;
  p.a = {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}};
  p.b = {1, 2, 1};
  p.c = {1, 2, 3};
  const Solution s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == 2);
  check_certificates(p, s);
}

TEST_CASE("random problems satisfy strong duality or carry a Farkas certificate") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 4);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = dim(rng), n = dim(rng) + 1;
    StandardFormLp p;
    p.a.assign(static_cast<std::size_t>(m), Vector(static_cast<std::size_t>(n)));
    for (auto& row : p.a)
      for (auto& v : row) v = entry(rng);
    for (int i = 0; i < m; ++i) p.b.emplace_back(entry(rng));
    // Nonnegative costs keep the problem bounded.
    for (int j = 0; j < n; ++j) p.c.emplace_back(std::abs(entry(rng)));
    const Solution s = solve(p);
    REQUIRE(s.status != Status::unbounded);
    optimal += s.status == Status::optimal;
    infeasible += s.status == Status::infeasible;
    check_certificates(p, s);
  }
  CHECK(optimal > 20);
  CHECK(infeasible > 20);
}
