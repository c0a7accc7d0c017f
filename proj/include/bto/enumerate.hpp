#pragma once

// Exhaustive generation of boolean term orders.
//
// An order on [n] restricts to an order on [n-1], and the subsets containing n
// appear in the order induced by deleting n. Every order on [n] is therefore an
// interleaving of two chains: the parent order, and the parent order with n
// added to every subset. The search merges the two chains depth-first and
// prunes as soon as two comparisons of the form (a|{n}) vs b disagree on a
// translate, which is the only way the union axiom can fail.

#include <cstdint>
#include <functional>
#include <vector>

#include "bto/term_order.hpp"

namespace bto {

enum class EnumerationMode {
  all,             ///< every labeled order
  canonical_only,  ///< one order per relabeling class
};

struct EnumerationResult {
  int n = 0;
  std::uint64_t class_count = 0;
  std::uint64_t total_count = 0;  ///< class_count * n!
  std::vector<TermOrder> orders;  ///< filled only by enumerate_orders
};

inline constexpr int kMaxEnumerationSize = 7;

std::uint64_t factorial(int n);

/// All valid orders on [n] whose restriction to [n-1] is `parent`, in
/// deterministic order. Throws InvalidOrder if `parent` is not valid.
std::vector<TermOrder> extend(const TermOrder& parent);

/// Extensions of `parent` with {n-1} < {n}; applied to canonical parents these
/// are exactly the canonical orders on [n]. No validity check on `parent`.
std::vector<TermOrder> extend_canonical(const TermOrder& parent);

/// Calls `visit` for each extension instead of storing them; returns the count.
std::uint64_t visit_extensions(const TermOrder& parent, bool canonical,
                               const std::function<void(const TermOrder&)>& visit);

/// Canonical orders on [n] (singletons sorted), one per class, in
/// deterministic order. 1 <= n <= 7.
std::vector<TermOrder> canonical_orders(int n, unsigned threads = 1);

/// Every order on [n] (mode all) or one per class (canonical_only). Emission
/// order is deterministic for any thread count.
std::vector<TermOrder> enumerate_orders(int n, EnumerationMode mode, unsigned threads = 1);

/// Streams canonical orders on [n] to `visit`, grouped by parent. With
/// threads > 1, `visit` is called concurrently from worker threads; the worker
/// index (0-based, < threads) is passed so callers can keep per-thread state.
void for_each_canonical_order(int n, unsigned threads,
                              const std::function<void(unsigned worker, const TermOrder&)>& visit);

/// Counts without storing the orders on [n]; memory is the parent level only.
EnumerationResult count_orders(int n, unsigned threads = 1);

}  // namespace bto
