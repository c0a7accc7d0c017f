#include <doctest.h>

#include <algorithm>
#include <set>

#include "bto/baues.hpp"
#include "bto/coherence.hpp"
#include "bto/enumerate.hpp"
#include "bto/flips.hpp"
#include "support.hpp"

using namespace bto;
using bto::testing::data_order;
using bto::testing::subsets;

namespace {

// A nonzero integer w in [-r, r]^n with w(b) >= w(a) for every consecutive a < b.
bool small_weight_above(const TermOrder& o, int r) {
  const int n = o.n();
  std::vector<int> w(static_cast<std::size_t>(n), -r);
  auto sum = [&](Subset s) {
    int t = 0;
    for (int i = 1; i <= n; ++i)
      if (s.contains(i)) t += w[static_cast<std::size_t>(i - 1)];
    return t;
  };
  while (true) {
    const bool nonzero = std::any_of(w.begin(), w.end(), [](int v) { return v != 0; });
    bool ok = nonzero;
    for (std::size_t p = 0; ok && p + 1 < o.size(); ++p) ok = sum(o.at(p + 1)) >= sum(o.at(p));
    if (ok) return true;
    std::size_t i = 0;
    while (i < w.size() && w[i] == r) w[i++] = -r;
    if (i == w.size()) return false;
    ++w[i];
  }
}

std::vector<PartialTermOrder> all_partial(int n) {
  std::vector<PartialTermOrder> out;
  std::set<std::vector<int>> seen;
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<int> level(subsets, 0);
  while (true) {
    const PartialTermOrder p = PartialTermOrder::from_levels(n, level);
    if (validate_partial(p, 1).ok() && seen.insert(std::vector<int>(p.levels().begin(), p.levels().end())).second)
      out.push_back(p);
    std::size_t i = 0;
    while (i < subsets && level[i] == static_cast<int>(subsets) - 1) level[i++] = 0;
    if (i == subsets) break;
    ++level[i];
  }
  return out;
}

}  // namespace

TEST_CASE("validation of partial orders") {
  for (int n = 1; n <= 4; ++n)
    for (const TermOrder& o : enumerate_orders(n, EnumerationMode::all))
      REQUIRE(validate_partial(PartialTermOrder::from_order(o)).ok());
  CHECK(validate_partial(PartialTermOrder::trivial(3)).ok());

  const std::vector<Rational> tied{1, 1};
  const PartialTermOrder p = PartialTermOrder::from_weights(tied);
  CHECK(validate_partial(p).ok());
  CHECK(p.level_count() == 3);
  CHECK(p.tied(Subset::of({1}), Subset::of({2})));
  CHECK(p.precedes(Subset(), Subset::of({1})));
  CHECK(p.precedes(Subset::of({2}), Subset::of({1, 2})));
  CHECK_FALSE(p.is_total());
  CHECK(p.is_boolean());

  // {1} < {2} but {1,3} > {2,3}.
  const PartialTermOrder bad = PartialTermOrder::from_groups(
      3, {{Subset()}, {Subset::of({1})}, {Subset::of({2})}, {Subset::of({3})}, {Subset::of({2, 3})},
          {Subset::of({1, 3})}, {Subset::of({1, 2})}, {Subset::of({1, 2, 3})}});
  const PartialValidation v = validate_partial(bad);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations.front().kind == PartialViolation::Kind::translation);
  CHECK_FALSE(v.violations.front().describe().empty());
  CHECK(validate_partial(bad, 1).violations.size() == 1);

  const PartialTermOrder tie = PartialTermOrder::from_levels(2, std::vector<int>{0, 1, 1, 2});
  CHECK(validate_partial(tie).ok());
  // {3} < {2} but {1,2} < {1,3}.
  const PartialTermOrder split = PartialTermOrder::from_levels(3, std::vector<int>{0, 1, 3, 4, 2, 5, 6, 7});
  CHECK_FALSE(validate_partial(split).ok());
}

TEST_CASE("levels are compressed") {
  const PartialTermOrder p = PartialTermOrder::from_levels(2, std::vector<int>{-5, 7, 7, 100});
  CHECK(p.level_count() == 3);
  CHECK(p.level(Mask{0}) == 0);
  CHECK(p.level(Mask{3}) == 2);
  CHECK_THROWS_AS(PartialTermOrder::from_levels(2, std::vector<int>{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(p.to_total(), std::logic_error);
  CHECK(PartialTermOrder::from_order(binary_order(3)).to_total() == binary_order(3));
}

TEST_CASE("refinement") {
  const PartialTermOrder top = PartialTermOrder::trivial(2);
  const std::vector<Rational> tied{1, 1};
  const PartialTermOrder mid = PartialTermOrder::from_weights(tied);
  const PartialTermOrder bottom = PartialTermOrder::from_order(binary_order(2));
  CHECK(refines(bottom, mid));
  CHECK(refines(mid, top));
  CHECK(refines(bottom, top));
  CHECK_FALSE(refines(top, mid));
  CHECK_FALSE(refines(mid, bottom));
  CHECK_THROWS_AS(refines(bottom, PartialTermOrder::trivial(3)), std::invalid_argument);

  // Refinement is a partial order on the generalized partial orders of [2].
  const auto all = all_partial(2);
  for (const auto& a : all) {
    REQUIRE(refines(a, a));
    REQUIRE(refines(a, PartialTermOrder::trivial(2)));
    for (const auto& b : all) {
      if (!(a == b)) REQUIRE_FALSE((refines(a, b) && refines(b, a)));
      for (const auto& c : all)
        if (refines(a, b) && refines(b, c)) REQUIRE(refines(a, c));
    }
  }
}

TEST_CASE("coherent orders lie below a nontrivial coherent partial order") {
  for (int n = 1; n <= 4; ++n)
    for (const TermOrder& o : enumerate_orders(n, EnumerationMode::all)) REQUIRE_FALSE(coherent_above_only_trivial(o));
  for (const TermOrder& o : canonical_orders(5)) {
    const bool only_trivial = coherent_above_only_trivial(o);
    if (only_trivial) REQUIRE_FALSE(decide_coherence(o).coherent);
    if (small_weight_above(o, 2)) REQUIRE_FALSE(only_trivial);
  }
}

TEST_CASE("an order below no coherent partial order but the trivial one") {
  const TermOrder o = data_order("below_no_coherent_n6.bto");
  REQUIRE(is_valid(o));
  CHECK_FALSE(decide_coherence(o).coherent);
  CHECK(coherent_above_only_trivial(o));
  CHECK_FALSE(small_weight_above(o, 2));

  const TermOrder flipped = flip(o, DisjointPair::parse("5<1,3,4"));
  CHECK(flipped == order_from_weight(std::vector<long>{2, 9, 12, 28, 48, 70}));
  CHECK_FALSE(coherent_above_only_trivial(flipped));
}

TEST_CASE("the noncoherent example on [5]") {
  const TermOrder o = data_order("noncoherent_n5.bto");
  const bool only_trivial = coherent_above_only_trivial(o);
  MESSAGE("coherent_above_only_trivial(noncoherent_n5) = " << only_trivial);
  if (small_weight_above(o, 3)) CHECK_FALSE(only_trivial);
  CHECK_THROWS_AS(coherent_above_only_trivial(TermOrder::from_sequence(2, subsets("1 - 2 1,2"))), InvalidOrder);
}

TEST_CASE("partial order files") {
  const std::vector<Rational> tied{1, 1, 2};
  const PartialTermOrder p = PartialTermOrder::from_weights(tied);
  const std::string text = serialize_partial_order(p);
  CHECK(text == "n=3\n-\n1=2\n1,2=3\n1,3=2,3\n1,2,3\n");
  CHECK(parse_partial_order(text) == p);
  CHECK(parse_partial_order("# comment\nn=1\n-=1\n") == PartialTermOrder::trivial(1));
  CHECK_THROWS(parse_partial_order("n=2\n-\n1=2\n"));
  CHECK_THROWS(parse_partial_order("n=2\n-\n1=1\n2\n1,2\n"));
}
