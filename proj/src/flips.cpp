#include "bto/flips.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "bto/coherence.hpp"
#include "bto/enumerate.hpp"
#include "bto/parallel.hpp"

namespace bto {

namespace {

void require_valid(const TermOrder& order, const char* what) {
  if (!is_valid(order)) throw InvalidOrder(std::string(what) + ": order violates the term order axioms");
}

bool translates_adjacent(const TermOrder& order, DisjointPair pair) {
  const Mask free = full_mask(order.n()) & ~(pair.left | pair.right).bits();
  bool ok = true;
  for_each_submask(free, [&](Mask l) {
    if (ok && order.rank(pair.right.bits() | l) != order.rank(pair.left.bits() | l) + 1) ok = false;
  });
  return ok;
}

// Breadth-first search restricted to vertices where keep(v) holds.
template <class Keep>
bool connected_on(const std::vector<std::vector<std::uint32_t>>& adj, Keep keep) {
  std::vector<char> seen(adj.size(), 0);
  std::size_t start = adj.size(), total = 0;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (keep(v)) {
      ++total;
      if (start == adj.size()) start = v;
    }
  if (total == 0) return true;
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(start)};
  seen[start] = 1;
  std::size_t reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t w : adj[queue[head]]) {
      if (seen[w] || !keep(w)) continue;
      seen[w] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached == total;
}

}  // namespace

namespace detail {

std::vector<DisjointPair> primitive_pairs_unchecked(const TermOrder& order) {
  std::vector<DisjointPair> out;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) {
    const Subset a = order.at(p), b = order.at(p + 1);
    if (a.disjoint(b)) out.push_back({a, b});
  }
  return out;
}

std::vector<DisjointPair> flippable_pairs_unchecked(const TermOrder& order) {
  std::vector<DisjointPair> out;
  for (const DisjointPair& p : primitive_pairs_unchecked(order))
    if (translates_adjacent(order, p)) out.push_back(p);
  return out;
}

TermOrder flip_unchecked(const TermOrder& order, DisjointPair pair) {
  std::vector<Mask> seq(order.sequence().begin(), order.sequence().end());
  const Mask free = full_mask(order.n()) & ~(pair.left | pair.right).bits();
  for_each_submask(free, [&](Mask l) {
    std::swap(seq[order.rank(pair.left.bits() | l)], seq[order.rank(pair.right.bits() | l)]);
  });
  return TermOrder::from_masks(order.n(), seq);
}

}  // namespace detail

std::vector<DisjointPair> primitive_pairs(const TermOrder& order) {
  require_valid(order, "primitive_pairs");
  return detail::primitive_pairs_unchecked(order);
}

std::vector<DisjointPair> flippable_pairs(const TermOrder& order) {
  require_valid(order, "flippable_pairs");
  return detail::flippable_pairs_unchecked(order);
}

bool is_flippable(const TermOrder& order, DisjointPair pair) {
  if (!pair.valid() || !pair.left.fits(order.n()) || !pair.right.fits(order.n())) return false;
  if (order.rank(pair.right) != order.rank(pair.left) + 1) return false;
  return translates_adjacent(order, pair);
}

TermOrder flip(const TermOrder& order, DisjointPair pair) {
  require_valid(order, "flip");
  if (pair.left.empty()) throw std::invalid_argument("cannot flip a pair whose left side is empty");
  if (!is_flippable(order, pair)) throw std::invalid_argument("pair " + pair.to_string() + " is not flippable");
  return detail::flip_unchecked(order, pair);
}

TermOrder deficient_extension(const TermOrder& seed, int n) {
  require_valid(seed, "deficient_extension");
  if (n < seed.n() || n > kMaxGroundSize) throw std::invalid_argument("deficient_extension: bad target size");
  std::vector<Mask> seq(seed.sequence().begin(), seed.sequence().end());
  for (int k = seed.n(); k < n; ++k) {
    const Mask top = Mask{1} << k;
    const std::size_t half = seq.size();
    for (std::size_t p = 0; p < half; ++p) seq.push_back(seq[p] | top);
  }
  return TermOrder::from_masks(n, seq);
}

TermOrder lex_product(const TermOrder& major, const TermOrder& minor) {
  require_valid(major, "lex_product");
  require_valid(minor, "lex_product");
  const int k = minor.n();
  if (major.n() + k > kMaxGroundSize) throw std::invalid_argument("lex_product: ground set too large");
  std::vector<Mask> seq;
  seq.reserve(major.size() * minor.size());
  for (const Mask a : major.sequence())
    for (const Mask b : minor.sequence()) seq.push_back((a << k) | b);
  return TermOrder::from_masks(major.n() + k, seq);
}

std::map<int, std::uint64_t> flippable_distribution(int n, unsigned threads) {
  if (threads == 0) threads = default_threads();
  std::vector<std::map<int, std::uint64_t>> partial(threads);
  for_each_canonical_order(n, threads, [&](unsigned worker, const TermOrder& o) {
    ++partial[worker][static_cast<int>(detail::flippable_pairs_unchecked(o).size())];
  });
  std::map<int, std::uint64_t> total;
  for (const auto& p : partial)
    for (const auto& [k, c] : p) total[k] += c;
  return total;
}

std::size_t FlipGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

bool FlipGraph::connected() const {
  return connected_on(adjacency, [](std::size_t) { return true; });
}

bool FlipGraph::coherent_connected() const {
  if (!has_coherence) throw std::logic_error("flip graph was built without coherence data");
  return connected_on(adjacency, [&](std::size_t v) { return bool(coherent[v]); });
}

std::map<int, std::uint64_t> FlipGraph::flippable_histogram() const {
  std::map<int, std::uint64_t> h;
  for (int c : flippable_count) ++h[c];
  return h;
}

std::map<int, std::uint64_t> FlipGraph::degree_histogram() const {
  std::map<int, std::uint64_t> h;
  for (const auto& nb : adjacency) ++h[static_cast<int>(nb.size())];
  return h;
}

std::map<int, std::uint64_t> FlipGraph::coherent_degree_histogram() const {
  if (!has_coherence) throw std::logic_error("flip graph was built without coherence data");
  std::map<int, std::uint64_t> h;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (coherent[v]) ++h[coherent_flips[v]];
  return h;
}

FlipGraph flip_graph(int n, FlipGraphMode mode, bool with_coherence, unsigned threads) {
  if (n < 1 || n > 6) throw std::invalid_argument("flip_graph: n must be in 1..6");
  FlipGraph g;
  g.n = n;
  g.mode = mode;
  g.vertices = enumerate_orders(n, mode == FlipGraphMode::canonical ? EnumerationMode::canonical_only
                                                                     : EnumerationMode::all,
                                threads);
  const std::size_t count = g.vertices.size();
  std::unordered_map<TermOrder, std::uint32_t, TermOrderHash> index;
  index.reserve(count);
  for (std::size_t v = 0; v < count; ++v) index.emplace(g.vertices[v], static_cast<std::uint32_t>(v));

  g.has_coherence = with_coherence;
  std::vector<char> coherent(count, 0);
  if (with_coherence)
    parallel_for(count, threads, [&](unsigned, std::size_t v) { coherent[v] = decide_coherence(g.vertices[v]).coherent; });
  g.coherent.assign(coherent.begin(), coherent.end());

  g.adjacency.assign(count, {});
  g.flippable_count.assign(count, 0);
  g.coherent_flips.assign(count, 0);
  parallel_for(count, threads, [&](unsigned, std::size_t v) {
    const auto pairs = detail::flippable_pairs_unchecked(g.vertices[v]);
    g.flippable_count[v] = static_cast<int>(pairs.size());
    auto& nb = g.adjacency[v];
    for (const DisjointPair& p : pairs) {
      if (p.left.empty()) continue;
      TermOrder next = detail::flip_unchecked(g.vertices[v], p);
      if (mode == FlipGraphMode::canonical) next = canonical_form(next);
      const auto it = index.find(next);
      if (it == index.end()) throw std::logic_error("flip produced an order outside the vertex set");
      if (with_coherence && coherent[it->second]) ++g.coherent_flips[v];
      if (it->second != v) nb.push_back(it->second);
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  });
  return g;
}

}  // namespace bto
