#pragma once

// Primitive and flippable pairs, flips, and flip graphs.
//
// A primitive pair is a consecutive pair a < b of disjoint subsets. It is
// flippable when every translate a|l < b|l (l disjoint from a|b) is also
// consecutive; flipping swaps all of those translates at once and changes
// no other comparison of disjoint subsets.

#include <cstdint>
#include <map>
#include <vector>

#include "bto/term_order.hpp"

namespace bto {

std::vector<DisjointPair> primitive_pairs(const TermOrder& order);
std::vector<DisjointPair> flippable_pairs(const TermOrder& order);
bool is_flippable(const TermOrder& order, DisjointPair pair);

/// Swaps a|l and b|l for every l disjoint from a|b. Throws std::invalid_argument
/// if the pair is not flippable or its left side is empty, and InvalidOrder
/// for an invalid input.
TermOrder flip(const TermOrder& order, DisjointPair pair);

/// The order on [n] obtained by appending each new element k+1 right after
/// [k]: all subsets of [k] first, then each of them with k+1 added.
TermOrder deficient_extension(const TermOrder& seed, int n);

/// Order on [m+k] comparing the parts on `major` first and breaking ties with
/// `minor`. The minor factor's elements become 1..k, the major's k+1..k+m.
TermOrder lex_product(const TermOrder& major, const TermOrder& minor);

/// Histogram: number of flippable pairs -> number of canonical orders on [n].
std::map<int, std::uint64_t> flippable_distribution(int n, unsigned threads = 1);

enum class FlipGraphMode { canonical, labeled };

struct FlipGraph {
  int n = 0;
  FlipGraphMode mode = FlipGraphMode::canonical;
  std::vector<TermOrder> vertices;
  /// Sorted neighbor lists without repeats or self-loops.
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::vector<int> flippable_count;  ///< including pairs with an empty left side
  bool has_coherence = false;
  std::vector<bool> coherent;
  /// For each vertex, how many of its flips land on a coherent order; for a
  /// coherent vertex this is the number of bounded facets of its region.
  std::vector<int> coherent_flips;

  std::size_t edge_count() const;
  bool connected() const;
  /// Connectivity of the subgraph induced on coherent vertices.
  bool coherent_connected() const;
  std::map<int, std::uint64_t> flippable_histogram() const;
  std::map<int, std::uint64_t> degree_histogram() const;
  /// Over coherent vertices: coherent_flips -> count.
  std::map<int, std::uint64_t> coherent_degree_histogram() const;
};

/// Vertices are the canonical orders on [n] (or all labelings). Edges join
/// orders one flip apart; in canonical mode the flipped order is
/// canonicalized, so edges are taken up to relabeling. 1 <= n <= 6.
FlipGraph flip_graph(int n, FlipGraphMode mode, bool with_coherence = true, unsigned threads = 1);

namespace detail {
// Variants without the validity check, for callers that already know the
// order is a valid term order.
std::vector<DisjointPair> primitive_pairs_unchecked(const TermOrder& order);
std::vector<DisjointPair> flippable_pairs_unchecked(const TermOrder& order);
TermOrder flip_unchecked(const TermOrder& order, DisjointPair pair);
}  // namespace detail

}  // namespace bto
