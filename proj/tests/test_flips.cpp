#include <doctest.h>

#include <algorithm>
#include <map>

#include "bto/baues.hpp"
#include "bto/coherence.hpp"
#include "bto/enumerate.hpp"
#include "bto/flips.hpp"
#include "support.hpp"

using namespace bto;
using bto::testing::data_order;
using bto::testing::subsets;

namespace {

std::vector<DisjointPair> pairs(std::initializer_list<const char*> texts) {
  std::vector<DisjointPair> out;
  for (const char* t : texts) out.push_back(DisjointPair::parse(t));
  return out;
}

// Flippable pairs straight from the definition, scanning every disjoint pair.
std::vector<DisjointPair> naive_flippable(const TermOrder& o) {
  std::vector<DisjointPair> out;
  const Mask full = full_mask(o.n());
  for (Mask a = 0; a <= full; ++a)
    for_each_submask(full & ~a, [&](Mask b) {
      if (b == 0 || o.rank(b) != o.rank(a) + 1) return;
      bool all = true;
      for_each_submask(full & ~(a | b), [&](Mask l) { all = all && o.rank(b | l) == o.rank(a | l) + 1; });
      if (all) out.push_back({Subset(a), Subset(b)});
    });
  std::sort(out.begin(), out.end(), [&](const DisjointPair& x, const DisjointPair& y) {
    return o.rank(x.left) < o.rank(y.left);
  });
  return out;
}

std::vector<TermOrder> labeled_up_to(int n) {
  std::vector<TermOrder> out;
  for (int k = 1; k <= n; ++k) {
    auto level = enumerate_orders(k, EnumerationMode::all);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

TEST_CASE("pairs of the noncoherent example") {
  const TermOrder o = data_order("noncoherent_n5.bto");
  CHECK(primitive_pairs(o) == pairs({"-<1", "1<2", "2<3", "3<4", "4<1,2", "1,2<5", "5<1,3", "2,3<1,4", "1,5<2,4",
                                     "2,5<3,4", "1,2,4<3,5"}));
  CHECK(flippable_pairs(o) == pairs({"4<1,2", "2,3<1,4", "1,5<2,4", "2,5<3,4", "1,2,4<3,5"}));
}

TEST_CASE("flip validity, involution and locality") {
  for (const TermOrder& o : labeled_up_to(4)) {
    for (const DisjointPair& p : flippable_pairs(o)) {
      if (p.left.empty()) {
        CHECK_THROWS_AS(flip(o, p), std::invalid_argument);
        continue;
      }
      const TermOrder f = flip(o, p);
      REQUIRE(is_valid(f));
      REQUIRE(is_flippable(f, p.reversed()));
      REQUIRE(flip(f, p.reversed()) == o);
      // Only the comparison of the flipped pair changes among disjoint pairs.
      const Mask full = full_mask(o.n());
      for (Mask a = 0; a <= full; ++a)
        for_each_submask(full & ~a, [&](Mask b) {
          const bool same = o.precedes(Subset(a), Subset(b)) == f.precedes(Subset(a), Subset(b));
          const bool is_pair = (Subset(a) == p.left && Subset(b) == p.right) ||
                               (Subset(b) == p.left && Subset(a) == p.right);
          REQUIRE(same != is_pair);
        });
    }
  }
}

TEST_CASE("flippable pairs match the definition and the central pair is always flippable") {
  for (int n = 1; n <= 5; ++n)
    for (const TermOrder& o : canonical_orders(n)) {
      const auto fast = flippable_pairs(o);
      REQUIRE(fast == naive_flippable(o));
      const std::size_t mid = o.size() / 2;
      REQUIRE(is_flippable(o, {o.at(mid - 1), o.at(mid)}));
    }
}

TEST_CASE("primitive pairs determine the order (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    const auto orders = enumerate_orders(n, EnumerationMode::all);
    for (const TermOrder& a : orders) {
      const auto prim = primitive_pairs(a);
      for (const TermOrder& b : orders) {
        if (a == b) continue;
        const bool separated = std::any_of(prim.begin(), prim.end(), [&](const DisjointPair& p) {
          return b.precedes(p.right, p.left);
        });
        REQUIRE(separated);
      }
    }
  }
}

TEST_CASE("flip errors") {
  const TermOrder o = data_order("noncoherent_n5.bto");
  CHECK_THROWS_AS(flip(o, DisjointPair::parse("-<1")), std::invalid_argument);
  CHECK_THROWS_AS(flip(o, DisjointPair::parse("1<2")), std::invalid_argument);
  CHECK_FALSE(is_flippable(o, DisjointPair::parse("1<3")));
  CHECK_THROWS_AS(flip(TermOrder::from_sequence(2, subsets("1 - 2 1,2")), DisjointPair::parse("1<2")), InvalidOrder);
}

TEST_CASE("coherent orders have at least n flippable pairs") {
  for (int n = 1; n <= 5; ++n)
    for (const TermOrder& o : canonical_orders(n))
      if (decide_coherence(o).coherent) REQUIRE(flippable_pairs(o).size() >= static_cast<std::size_t>(n));
}

TEST_CASE("five facet order on [4]") {
  const TermOrder o = data_order("five_facets_n4.bto");
  CHECK(decide_coherence(o).coherent);
  CHECK(flippable_pairs(o) == pairs({"1<2", "2<3", "3<1,2", "2,3<4", "4<1,2,3"}));
  const FlipGraph g = flip_graph(4, FlipGraphMode::labeled);
  const auto it = std::find(g.vertices.begin(), g.vertices.end(), o);
  REQUIRE(it != g.vertices.end());
  CHECK(g.coherent_flips[static_cast<std::size_t>(it - g.vertices.begin())] == 5);
  CHECK(g.coherent_degree_histogram().rbegin()->first == 5);
}

TEST_CASE("flip deficiency") {
  const TermOrder o = data_order("flip_deficient_n6.bto");
  CHECK_FALSE(decide_coherence(o).coherent);
  const auto mine = flippable_pairs(o);
  CHECK(mine == pairs({"3,4<1,5", "6<1,3,4", "3,5<1,6", "1,4,5<3,6", "1,3,6<2,4,5"}));
  // The weight vector ties {1,2,4} with {6} and {1,4,5} with {2,6}, so it
  // induces a partial order rather than a total one.
  const std::vector<Rational> w{6, 14, 15, 18, 28, 38};
  CHECK_THROWS_AS(order_from_weight(w), TieError);
  const PartialTermOrder coherent = PartialTermOrder::from_weights(w);
  CHECK(coherent.tied(Subset::of({1, 2, 4}), Subset::of({6})));
  CHECK(coherent.tied(Subset::of({1, 4, 5}), Subset::of({2, 6})));
  for (const DisjointPair& p : mine) CHECK(coherent.precedes(p.left, p.right));
  CHECK_FALSE(refines(PartialTermOrder::from_order(o), coherent));
  CHECK(coherent.precedes(Subset::of({3}), Subset::of({1, 2})));
  CHECK(o.precedes(Subset::of({1, 2}), Subset::of({3})));

  for (int n = 7; n <= 8; ++n) {
    const TermOrder big = deficient_extension(o, n);
    CHECK(is_valid(big));
    CHECK(flippable_pairs(big).size() == static_cast<std::size_t>(n - 1));
  }
  CHECK(deficient_extension(o, 6) == o);
}

TEST_CASE("lexicographic product") {
  const TermOrder example = data_order("noncoherent_n5.bto");
  const TermOrder product = lex_product(example, binary_order(1));
  CHECK(product == data_order("isolated_n6.bto"));
  CHECK(lex_product(binary_order(2), binary_order(2)) == binary_order(4));
}

TEST_CASE("flip graphs") {
  for (int n = 1; n <= 5; ++n) {
    const FlipGraph g = flip_graph(n, FlipGraphMode::canonical, n <= 4);
    CHECK(g.vertices.size() == count_orders(n).class_count);
    CHECK(g.connected());
    for (std::size_t v = 0; v < g.adjacency.size(); ++v)
      for (std::uint32_t w : g.adjacency[v]) REQUIRE(std::binary_search(g.adjacency[w].begin(), g.adjacency[w].end(), v));
  }
  for (int n = 1; n <= 4; ++n) {
    const FlipGraph g = flip_graph(n, FlipGraphMode::labeled);
    CHECK(g.vertices.size() == count_orders(n).total_count);
    CHECK(g.connected());
    CHECK(g.coherent_connected());
  }
  CHECK(flip_graph(5, FlipGraphMode::canonical, false, 1).adjacency ==
        flip_graph(5, FlipGraphMode::canonical, false, 3).adjacency);
}

TEST_CASE("flippable histogram agrees with a direct count") {
  std::map<int, std::uint64_t> direct;
  for (const TermOrder& o : canonical_orders(5)) ++direct[static_cast<int>(naive_flippable(o).size())];
  CHECK(flippable_distribution(5) == direct);
  CHECK(flippable_distribution(5, 2) == direct);
}
