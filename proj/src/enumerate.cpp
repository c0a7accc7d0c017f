#include "bto/enumerate.hpp"

#include <stdexcept>

#include "bto/parallel.hpp"

namespace bto {

namespace {

void check_range(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw std::invalid_argument("n must be in 1.." + std::to_string(kMaxEnumerationSize));
}

// Merges the parent chain O (subsets of [n-1]) with the shifted chain S
// (the same subsets with n added). A cross comparison between S[k] = X|{n}
// and O[l] = Y reduces to the disjoint pair (a|{n}, b) with a = X\Y and
// b = Y\X; the union axiom holds iff every cross comparison sharing a key
// (a, b) has the same outcome. `sign_` records the outcome per key:
// +1 when b precedes a|{n}, -1 when a|{n} precedes b.
class Interleaver {
 public:
  Interleaver(const TermOrder& parent, bool canonical, const std::function<void(const TermOrder&)>& visit)
      : n_(parent.n() + 1),
        half_(std::size_t{1} << parent.n()),
        parent_(parent.sequence().begin(), parent.sequence().end()),
        sign_(half_ * half_, 0),
        merged_(2 * half_),
        visit_(visit) {
    // The empty set comes first: {n} is above the empty set and so is every translate.
    sign_[0] = +1;
    // Canonical labeling: {n-1} < {n}.
    if (canonical && n_ >= 2) sign_[std::size_t{1} << (n_ - 2)] = +1;
  }

  std::uint64_t run() {
    search(0, 0);
    return count_;
  }

 private:
  std::size_t key(Mask shifted, Mask plain) const { return (shifted & ~plain) * half_ + (plain & ~shifted); }

  // Records the outcomes implied by placing the next element; false on conflict.
  bool place(bool from_parent, std::size_t i, std::size_t j) {
    const Mask head = from_parent ? parent_[i] : parent_[j];
    const std::int8_t want = from_parent ? +1 : -1;
    const std::size_t first = from_parent ? j : i;
    for (std::size_t k = first; k < half_; ++k) {
      const std::size_t idx = from_parent ? key(parent_[k], head) : key(head, parent_[k]);
      if (sign_[idx] == 0) {
        sign_[idx] = want;
        trail_.push_back(static_cast<std::uint32_t>(idx));
      } else if (sign_[idx] != want) {
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      sign_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void emit() {
    const TermOrder order = TermOrder::from_masks(n_, merged_);
    if (!is_valid(order)) throw std::logic_error("interleaving search produced an invalid order");
    ++count_;
    if (visit_) visit_(order);
  }

  void search(std::size_t i, std::size_t j) {
    const std::size_t depth = i + j;
    if (i == half_) {
      for (std::size_t k = j; k < half_; ++k) merged_[i + k] = parent_[k] | top();
      emit();
      return;
    }
    if (j == half_) {
      for (std::size_t k = i; k < half_; ++k) merged_[k + j] = parent_[k];
      emit();
      return;
    }
    const std::size_t mark = trail_.size();
    if (place(true, i, j)) {
      merged_[depth] = parent_[i];
      search(i + 1, j);
    }
    undo(mark);
    if (place(false, i, j)) {
      merged_[depth] = parent_[j] | top();
      search(i, j + 1);
    }
    undo(mark);
  }

  Mask top() const { return Mask{1} << (n_ - 1); }

  int n_;
  std::size_t half_;
  std::vector<Mask> parent_;
  std::vector<std::int8_t> sign_;
  std::vector<std::uint32_t> trail_;
  std::vector<Mask> merged_;
  const std::function<void(const TermOrder&)>& visit_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t visit_extensions(const TermOrder& parent, bool canonical,
                               const std::function<void(const TermOrder&)>& visit) {
  if (parent.n() + 1 > kMaxGroundSize) throw std::invalid_argument("extension would exceed the ground-set cap");
  return Interleaver(parent, canonical, visit).run();
}

std::vector<TermOrder> extend(const TermOrder& parent) {
  if (!is_valid(parent)) throw InvalidOrder("extend: parent order violates the term order axioms");
  std::vector<TermOrder> out;
  visit_extensions(parent, false, [&](const TermOrder& o) { out.push_back(o); });
  return out;
}

std::vector<TermOrder> extend_canonical(const TermOrder& parent) {
  std::vector<TermOrder> out;
  visit_extensions(parent, true, [&](const TermOrder& o) { out.push_back(o); });
  return out;
}

std::vector<TermOrder> canonical_orders(int n, unsigned threads) {
  check_range(n);
  std::vector<TermOrder> level{binary_order(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<TermOrder>> children(level.size());
    parallel_for(level.size(), threads, [&](unsigned, std::size_t i) { children[i] = extend_canonical(level[i]); });
    std::vector<TermOrder> next;
    for (auto& c : children) next.insert(next.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    level = std::move(next);
  }
  return level;
}

std::vector<TermOrder> enumerate_orders(int n, EnumerationMode mode, unsigned threads) {
  std::vector<TermOrder> canonical = canonical_orders(n, threads);
  if (mode == EnumerationMode::canonical_only) return canonical;
  std::vector<TermOrder> out;
  out.reserve(canonical.size() * factorial(n));
  for (const TermOrder& o : canonical)
    for_each_permutation(n, [&](std::span<const int> perm) { out.push_back(o.relabel(perm)); });
  return out;
}

void for_each_canonical_order(int n, unsigned threads,
                              const std::function<void(unsigned worker, const TermOrder&)>& visit) {
  check_range(n);
  if (n == 1) {
    visit(0, binary_order(1));
    return;
  }
  const std::vector<TermOrder> parents = canonical_orders(n - 1, threads);
  parallel_for(parents.size(), threads, [&](unsigned worker, std::size_t i) {
    visit_extensions(parents[i], true, [&](const TermOrder& o) { visit(worker, o); });
  });
}

EnumerationResult count_orders(int n, unsigned threads) {
  check_range(n);
  EnumerationResult result;
  result.n = n;
  if (n == 1) {
    result.class_count = 1;
  } else {
    const std::vector<TermOrder> parents = canonical_orders(n - 1, threads);
    std::vector<std::uint64_t> counts(parents.size(), 0);
    const std::function<void(const TermOrder&)> none;
    parallel_for(parents.size(), threads,
                 [&](unsigned, std::size_t i) { counts[i] = visit_extensions(parents[i], true, none); });
    for (auto c : counts) result.class_count += c;
  }
  result.total_count = result.class_count * factorial(n);
  return result;
}

}  // namespace bto
