#include "bto/baues.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bto/order_io.hpp"
#include "bto/rational_lp.hpp"

namespace bto {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

void check_size(int n) {
  if (n < 0 || n > kMaxGroundSize) throw std::invalid_argument("partial order: n out of range");
}

}  // namespace

PartialTermOrder PartialTermOrder::from_levels(int n, std::span<const int> level) {
  check_size(n);
  if (level.size() != std::size_t{1} << n)
    throw std::invalid_argument("partial order: expected " + std::to_string(std::size_t{1} << n) + " levels");
  std::vector<int> distinct(level.begin(), level.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  PartialTermOrder p;
  p.n_ = n;
  p.levels_ = static_cast<int>(distinct.size());
  p.level_.resize(level.size());
  for (std::size_t m = 0; m < level.size(); ++m)
    p.level_[m] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), level[m]) - distinct.begin());
  return p;
}

PartialTermOrder PartialTermOrder::from_groups(int n, const std::vector<std::vector<Subset>>& groups) {
  check_size(n);
  std::vector<int> level(std::size_t{1} << n, -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (Subset s : groups[g]) {
      if (!s.fits(n)) throw std::invalid_argument("partial order: subset " + s.to_string() + " outside [n]");
      if (level[s.bits()] >= 0) throw std::invalid_argument("partial order: duplicate subset " + s.to_string());
      level[s.bits()] = static_cast<int>(g);
    }
  if (std::find(level.begin(), level.end(), -1) != level.end())
    throw std::invalid_argument("partial order: some subset is missing");
  return from_levels(n, level);
}

PartialTermOrder PartialTermOrder::from_order(const TermOrder& order) {
  std::vector<int> level(order.ranks().begin(), order.ranks().end());
  return from_levels(order.n(), level);
}

PartialTermOrder PartialTermOrder::trivial(int n) {
  const std::vector<int> level(std::size_t{1} << n, 0);
  return from_levels(n, level);
}

PartialTermOrder PartialTermOrder::from_weights(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  check_size(n);
  std::vector<Rational> sum(std::size_t{1} << n);
  for (std::size_t m = 1; m < sum.size(); ++m)
    sum[m] = sum[m & (m - 1)] + weights[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(m)))];
  std::vector<Rational> distinct = sum;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> level(sum.size());
  for (std::size_t m = 0; m < sum.size(); ++m)
    level[m] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sum[m]) - distinct.begin());
  return from_levels(n, level);
}

bool PartialTermOrder::is_boolean() const {
  for (std::size_t m = 1; m < level_.size(); ++m)
    if (level_[m] <= level_[0]) return false;
  return true;
}

TermOrder PartialTermOrder::to_total() const {
  if (!is_total()) throw std::logic_error("partial order has ties");
  std::vector<std::uint32_t> rank(level_.begin(), level_.end());
  return TermOrder::from_ranks(n_, rank);
}

std::vector<std::vector<Subset>> PartialTermOrder::groups() const {
  std::vector<std::vector<Subset>> out(static_cast<std::size_t>(levels_));
  for (std::size_t m = 0; m < level_.size(); ++m) out[static_cast<std::size_t>(level_[m])].push_back(Subset(static_cast<Mask>(m)));
  return out;
}

std::string PartialViolation::describe() const {
  if (kind == Kind::translation)
    return "{" + a.to_string() + "} vs {" + b.to_string() + "} changes when adding {" + c.to_string() + "}";
  return "{" + a.to_string() + "}|{" + c.to_string() + "} tied with {" + b.to_string() + "}|{" + d.to_string() +
         "} and {" + b.to_string() + "} < {" + a.to_string() + "}, but not {" + c.to_string() + "} < {" +
         d.to_string() + "}";
}

PartialValidation validate_partial(const PartialTermOrder& p, std::size_t max_violations) {
  PartialValidation report;
  const Mask full = full_mask(p.n());
  const auto full_up = [&] { return report.violations.size() >= max_violations; };

  // Translation: sign(level a - level b) is unchanged by adding a disjoint c.
  for (Mask a = 0; a <= full && !full_up(); ++a) {
    for_each_submask(full & ~a, [&](Mask b) {
      if (full_up()) return;
      const int base = sign(p.level(a) - p.level(b));
      for_each_submask(full & ~(a | b), [&](Mask c) {
        if (full_up() || c == 0) return;
        if (sign(p.level(a | c) - p.level(b | c)) != base)
          report.violations.push_back({PartialViolation::Kind::translation, Subset(a), Subset(b), Subset(c), {}});
      });
    });
  }

  // Exchange: group the splits (x, y) of every subset by the level of x|y.
  std::vector<std::vector<std::pair<Mask, Mask>>> splits(static_cast<std::size_t>(p.level_count()));
  for (Mask u = 0; u <= full; ++u)
    for_each_submask(u, [&](Mask x) { splits[static_cast<std::size_t>(p.level(u))].emplace_back(x, u & ~x); });
  for (const auto& group : splits) {
    for (const auto& [a, c] : group) {
      if (full_up()) return report;
      for (const auto& [b, d] : group) {
        if (p.level(b) < p.level(a) && !(p.level(c) < p.level(d))) {
          report.violations.push_back(
              {PartialViolation::Kind::exchange, Subset(a), Subset(b), Subset(c), Subset(d)});
          if (full_up()) return report;
        }
      }
    }
  }
  return report;
}

bool refines(const PartialTermOrder& fine, const PartialTermOrder& coarse) {
  if (fine.n() != coarse.n()) throw std::invalid_argument("refines: ground sets differ");
  const std::size_t count = fine.size();
  for (Mask a = 0; a < count; ++a)
    for (Mask b = 0; b < count; ++b)
      if (coarse.level(a) < coarse.level(b) && !(fine.level(a) < fine.level(b))) return false;
  return true;
}

bool coherent_above_only_trivial(const TermOrder& order) {
  if (!is_valid(order)) throw InvalidOrder("coherent_above_only_trivial: order violates the term order axioms");
  const int n = order.n();
  std::set<DisjointPair> seen;
  std::vector<DisjointPair> rows;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) {
    const Subset lo = order.at(p), hi = order.at(p + 1);
    const DisjointPair pair{lo - hi, hi - lo};
    if (seen.insert(pair).second) rows.push_back(pair);
  }

  // Variables: u = w + 1 in [0, 2]^n, then a surplus per row and a slack per
  // coordinate. Row k reads  sum_i A_ki u_i - s_k = sum_i A_ki.
  const std::size_t un = static_cast<std::size_t>(n), m = rows.size();
  const std::size_t cols = un + m + un;
  lp::StandardFormLp base;
  for (std::size_t k = 0; k < m; ++k) {
    lp::Vector row(cols, 0);
    int total = 0;
    for (int i = 0; i < n; ++i) {
      const int coeff = int(rows[k].right.contains(i + 1)) - int(rows[k].left.contains(i + 1));
      row[static_cast<std::size_t>(i)] = coeff;
      total += coeff;
    }
    row[un + k] = -1;
    base.a.push_back(std::move(row));
    base.b.emplace_back(total);
  }
  for (std::size_t i = 0; i < un; ++i) {
    lp::Vector row(cols, 0);
    row[i] = 1;
    row[un + m + i] = 1;
    base.a.push_back(std::move(row));
    base.b.emplace_back(2);
  }

  for (std::size_t i = 0; i < un; ++i)
    for (int direction : {1, -1}) {
      lp::StandardFormLp problem = base;
      problem.c.assign(cols, 0);
      problem.c[i] = -direction;  // minimize -(+-u_i)
      const lp::Solution sol = lp::solve(problem);
      if (sol.status != lp::Status::optimal) throw std::logic_error("coherent_above_only_trivial: LP not optimal");
      // max of +-w_i = max of +-u_i -+ 1
      const Rational best = -sol.objective - direction;
      if (best > 0) return false;
    }
  return true;
}

PartialTermOrder parse_partial_order(std::string_view text) {
  const LeveledSubsets parsed = parse_levels(text);
  return PartialTermOrder::from_groups(parsed.n, parsed.levels);
}

std::string serialize_partial_order(const PartialTermOrder& p) {
  std::string out = "n=" + std::to_string(p.n()) + "\n";
  for (const auto& group : p.groups()) {
    for (std::size_t i = 0; i < group.size(); ++i) out += (i ? "=" : "") + group[i].to_string();
    out += '\n';
  }
  return out;
}

}  // namespace bto
