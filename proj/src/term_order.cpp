#include "bto/term_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace bto {

namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSize)
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxGroundSize));
}

}  // namespace

TermOrder::TermOrder(int n, std::vector<Index> seq) : n_(n), seq_(std::move(seq)), rank_(seq_.size()) {
  for (std::size_t p = 0; p < seq_.size(); ++p) rank_[seq_[p]] = static_cast<Index>(p);
}

TermOrder TermOrder::from_masks(int n, std::span<const Mask> sequence) {
  check_ground_size(n);
  const std::size_t count = std::size_t{1} << n;
  if (sequence.size() != count)
    throw std::invalid_argument("expected " + std::to_string(count) + " subsets, got " +
                                std::to_string(sequence.size()));
  std::vector<bool> seen(count, false);
  std::vector<Index> seq(count);
  for (std::size_t p = 0; p < count; ++p) {
    const Mask m = sequence[p];
    if (m >= count) throw std::invalid_argument("subset " + Subset(m).to_string() + " outside [" + std::to_string(n) + "]");
    if (seen[m]) throw std::invalid_argument("duplicate subset " + Subset(m).to_string());
    seen[m] = true;
    seq[p] = static_cast<Index>(m);
  }
  return TermOrder(n, std::move(seq));
}

TermOrder TermOrder::from_sequence(int n, std::span<const Subset> sequence) {
  std::vector<Mask> masks;
  masks.reserve(sequence.size());
  for (Subset s : sequence) masks.push_back(s.bits());
  return from_masks(n, masks);
}

TermOrder TermOrder::from_ranks(int n, std::span<const std::uint32_t> rank) {
  check_ground_size(n);
  const std::size_t count = std::size_t{1} << n;
  if (rank.size() != count)
    throw std::invalid_argument("rank array has length " + std::to_string(rank.size()) + ", expected " +
                                std::to_string(count));
  std::vector<Mask> seq(count, 0);
  std::vector<bool> seen(count, false);
  for (std::size_t m = 0; m < count; ++m) {
    if (rank[m] >= count || seen[rank[m]])
      throw std::invalid_argument("rank array is not a permutation of 0.." + std::to_string(count - 1));
    seen[rank[m]] = true;
    seq[rank[m]] = static_cast<Mask>(m);
  }
  return from_masks(n, seq);
}

TermOrder TermOrder::relabel(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("relabeling has wrong length");
  std::vector<Index> image(seq_.size());
  for (std::size_t m = 0; m < seq_.size(); ++m) {
    Mask out = 0;
    for (Mask rest = static_cast<Mask>(m); rest != 0; rest &= rest - 1)
      out |= Mask{1} << (perm[static_cast<std::size_t>(std::countr_zero(rest))] - 1);
    image[m] = static_cast<Index>(out);
  }
  std::vector<Index> seq(seq_.size());
  for (std::size_t p = 0; p < seq_.size(); ++p) seq[p] = image[seq_[p]];
  return TermOrder(n_, std::move(seq));
}

TermOrder TermOrder::restrict_to_prefix() const {
  if (n_ == 0) throw std::invalid_argument("cannot restrict an order on the empty ground set");
  const Mask top = Mask{1} << (n_ - 1);
  std::vector<Index> seq;
  seq.reserve(seq_.size() / 2);
  for (Index m : seq_)
    if ((m & top) == 0) seq.push_back(m);
  return TermOrder(n_ - 1, std::move(seq));
}

bool operator<(const TermOrder& a, const TermOrder& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.rank_ < b.rank_;
}

std::size_t TermOrder::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
  for (Index m : seq_) {
    h ^= m;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

TermOrder complete_by_complement(int n, std::span<const Subset> first_half) {
  check_ground_size(n);
  if (n == 0) return TermOrder{};
  const std::size_t half = std::size_t{1} << (n - 1);
  if (first_half.size() != half)
    throw std::invalid_argument("expected " + std::to_string(half) + " subsets in the first half");
  std::vector<Subset> seq(first_half.begin(), first_half.end());
  for (std::size_t i = half; i-- > 0;) seq.push_back(complement(first_half[i], n));
  return TermOrder::from_sequence(n, seq);
}

std::string Violation::describe() const {
  if (kind == Kind::empty_not_first) return alpha.to_string() + " precedes the empty set";
  return alpha.to_string() + " < " + beta.to_string() + " but adding " + gamma.to_string() + " reverses it";
}

ValidationReport validate(const TermOrder& order) {
  ValidationReport report;
  const int n = order.n();
  const Mask full = full_mask(n);
  for (std::size_t p = 0; p < order.rank(Mask{0}); ++p)
    report.violations.push_back({Violation::Kind::empty_not_first, order.at(p), Subset{}, Subset{}});

  for (Mask a = 0; a <= full; ++a) {
    for_each_submask(full & ~a, [&](Mask b) {
      if (order.rank(a) >= order.rank(b)) return;
      for_each_submask(full & ~(a | b), [&](Mask c) {
        if (c != 0 && order.rank(a | c) > order.rank(b | c))
          report.violations.push_back(
              {Violation::Kind::union_not_preserved, Subset(a), Subset(b), Subset(c)});
      });
    });
  }
  if (!report.violations.empty()) report.status = ValidationReport::Status::violates_axioms;
  return report;
}

ValidationReport validate_ranks(int n, std::span<const std::uint32_t> rank) {
  try {
    return validate(TermOrder::from_ranks(n, rank));
  } catch (const std::invalid_argument& e) {
    ValidationReport report;
    report.status = ValidationReport::Status::malformed;
    report.malformed_reason = e.what();
    return report;
  }
}

bool is_valid(const TermOrder& order) {
  const int n = order.n();
  const Mask full = full_mask(n);
  if (order.rank(Mask{0}) != 0) return false;
  for (Mask a = 0; a <= full; ++a) {
    bool ok = true;
    for_each_submask(full & ~a, [&](Mask b) {
      if (!ok || order.rank(a) >= order.rank(b)) return;
      for_each_submask(full & ~(a | b), [&](Mask c) {
        if (order.rank(a | c) > order.rank(b | c)) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

TermOrder canonical_form(const TermOrder& order) {
  const int n = order.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  int next = 1;
  for (const unsigned m : order.sequence())
    if (std::has_single_bit(m)) perm[static_cast<std::size_t>(std::countr_zero(m))] = next++;
  return order.relabel(perm);
}

TermOrder canonicalize(const TermOrder& order) {
  if (!is_valid(order)) throw InvalidOrder("canonicalize: order violates the term order axioms");
  return canonical_form(order);
}

bool is_canonical(const TermOrder& order) {
  for (int i = 1; i < order.n(); ++i)
    if (order.rank(Mask{1} << (i - 1)) > order.rank(Mask{1} << i)) return false;
  return true;
}

TermOrder binary_order(int n) {
  check_ground_size(n);
  std::vector<Mask> seq(std::size_t{1} << n);
  for (std::size_t m = 0; m < seq.size(); ++m) seq[m] = static_cast<Mask>(m);
  return TermOrder::from_masks(n, seq);
}

}  // namespace bto
