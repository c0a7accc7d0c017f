#include "bto/coherence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bto/enumerate.hpp"
#include "bto/parallel.hpp"
#include "bto/rational_lp.hpp"

namespace bto {

namespace {

// Consecutive comparisons reduced to disjoint sides, without repeats.
std::vector<DisjointPair> consecutive_pairs(const TermOrder& order) {
  std::set<DisjointPair> seen;
  std::vector<DisjointPair> out;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) {
    const Subset lo = order.at(p), hi = order.at(p + 1);
    const DisjointPair pair{lo - hi, hi - lo};
    if (seen.insert(pair).second) out.push_back(pair);
  }
  return out;
}

mpz_class lcm_of_denominators(std::span<const Rational> values) {
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

// Scales a nonnegative rational vector to the primitive integer vector on the same ray.
std::vector<mpz_class> primitive_integers(std::span<const Rational> values) {
  const mpz_class l = lcm_of_denominators(values);
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& v : values) {
    mpz_class x = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(std::move(x));
  }
  if (g != 0)
    for (auto& x : ints) x /= g;
  return ints;
}

}  // namespace

CoherenceResult decide_coherence(const TermOrder& order) {
  if (!is_valid(order)) throw InvalidOrder("coherence: order violates the term order axioms");
  const int n = order.n();
  const std::vector<DisjointPair> rows = consecutive_pairs(order);

  // Alternative system in the multipliers y >= 0:
  //   sum_k y_k (1_right - 1_left) = 0,  sum_k y_k = 1.
  lp::StandardFormLp problem;
  problem.a.assign(static_cast<std::size_t>(n) + 1, lp::Vector(rows.size()));
  problem.b.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  problem.b[static_cast<std::size_t>(n)] = 1;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const int coeff = int(rows[k].right.contains(i + 1)) - int(rows[k].left.contains(i + 1));
      problem.a[static_cast<std::size_t>(i)][k] = coeff;
    }
    problem.a[static_cast<std::size_t>(n)][k] = 1;
  }

  const lp::Solution sol = lp::solve(problem);
  CoherenceResult result;
  if (sol.status == lp::Status::optimal) {
    const std::vector<mpz_class> mult = primitive_integers(sol.x);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (mult[k] != 0) result.certificate.terms.push_back({rows[k], mult[k].get_ui()});
    return result;
  }

  // Farkas multipliers pi: pi_i * coeff_k,i + pi_n <= 0 for all k, pi_n > 0,
  // so w = -pi_{0..n-1} / pi_n satisfies every row with slack at least 1.
  const Rational& scale = sol.farkas[static_cast<std::size_t>(n)];
  WeightVector w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = -sol.farkas[static_cast<std::size_t>(i)] / scale;
  const std::vector<mpz_class> ints = primitive_integers(w);
  result.coherent = true;
  result.weights.assign(ints.begin(), ints.end());
  if (!(order_from_weight(result.weights) == order))
    throw std::logic_error("coherence: weight vector does not reproduce the order");
  return result;
}

std::optional<WeightVector> find_weight(const TermOrder& order) {
  CoherenceResult r = decide_coherence(order);
  if (!r.coherent) return std::nullopt;
  return std::move(r.weights);
}

Certificate noncoherence_certificate(const TermOrder& order) {
  CoherenceResult r = decide_coherence(order);
  if (r.coherent) throw std::invalid_argument("order is coherent; no noncoherence certificate exists");
  return std::move(r.certificate);
}

TermOrder order_from_weight(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  if (n > kMaxGroundSize) throw std::invalid_argument("too many weights");
  for (const auto& w : weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> sum(count);
  for (std::size_t m = 1; m < count; ++m) {
    const int low = std::countr_zero(static_cast<unsigned>(m));
    sum[m] = sum[m & (m - 1)] + weights[static_cast<std::size_t>(low)];
  }
  std::vector<Mask> seq(count);
  std::iota(seq.begin(), seq.end(), Mask{0});
  std::stable_sort(seq.begin(), seq.end(), [&](Mask a, Mask b) { return sum[a] < sum[b]; });
  for (std::size_t p = 0; p + 1 < count; ++p)
    if (sum[seq[p]] == sum[seq[p + 1]]) throw TieError(Subset(seq[p]), Subset(seq[p + 1]));
  return TermOrder::from_masks(n, seq);
}

TermOrder order_from_weight(std::span<const long> weights) {
  WeightVector w;
  for (long v : weights) w.emplace_back(v);
  return order_from_weight(w);
}

CertificateCheck verify_certificate(const TermOrder& order, const Certificate& certificate) {
  if (certificate.terms.empty()) return {false, "certificate is empty"};
  std::vector<long long> balance(static_cast<std::size_t>(order.n()), 0);
  for (const auto& term : certificate.terms) {
    const auto& p = term.pair;
    if (!p.valid()) return {false, "pair " + p.to_string() + " is not a pair of disjoint subsets"};
    if (!p.left.fits(order.n()) || !p.right.fits(order.n()))
      return {false, "pair " + p.to_string() + " uses elements outside the ground set"};
    if (term.multiplicity == 0) return {false, "pair " + p.to_string() + " has multiplicity 0"};
    if (!order.precedes(p.left, p.right))
      return {false, "ordering fails: " + p.right.to_string() + " precedes " + p.left.to_string()};
    for (int e : p.right.elements()) balance[static_cast<std::size_t>(e - 1)] += static_cast<long long>(term.multiplicity);
    for (int e : p.left.elements()) balance[static_cast<std::size_t>(e - 1)] -= static_cast<long long>(term.multiplicity);
  }
  for (std::size_t i = 0; i < balance.size(); ++i)
    if (balance[i] != 0)
      return {false, "cancellation fails: element " + std::to_string(i + 1) + " is off by " + std::to_string(balance[i])};
  return {true, {}};
}

std::uint64_t count_coherent(int n, unsigned threads) {
  if (threads == 0) threads = default_threads();
  std::vector<std::uint64_t> per_worker(threads, 0);
  for_each_canonical_order(n, threads, [&](unsigned worker, const TermOrder& o) {
    if (decide_coherence(o).coherent) ++per_worker[worker];
  });
  return std::accumulate(per_worker.begin(), per_worker.end(), std::uint64_t{0});
}

std::string format_certificate(const Certificate& certificate) {
  std::string out;
  for (const auto& t : certificate.terms)
    out += "pair: " + t.pair.left.to_string() + " < " + t.pair.right.to_string() + " x" +
           std::to_string(t.multiplicity) + "\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    const auto first = line.find_first_not_of(' ');
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    if (line.starts_with("pair:")) line = line.substr(5);
    CertificateTerm term;
    const auto x = line.rfind(" x");
    try {
      if (x != std::string::npos) {
        const std::string count = line.substr(x + 2);
        std::size_t used = 0;
        const unsigned long long v = std::stoull(count, &used);
        if (used != count.size() || v == 0) throw std::invalid_argument("bad multiplicity");
        term.multiplicity = v;
        line = line.substr(0, x);
      }
      term.pair = DisjointPair::parse(line);
    } catch (const std::exception& e) {
      throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": " + e.what());
    }
    cert.terms.push_back(term);
  }
  return cert;
}

std::string format_weights(std::span<const Rational> weights) {
  std::string out;
  for (const auto& w : weights) {
    if (!out.empty()) out += ',';
    out += w.get_str();
  }
  return out;
}

WeightVector parse_weights(std::string_view text) {
  WeightVector w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string tok(text.substr(pos, comma - pos));
    Rational v;
    if (tok.empty() || v.set_str(tok, 10) != 0 || v.get_den() == 0) throw std::invalid_argument("bad weight '" + tok + "'");
    v.canonicalize();
    w.push_back(v);
    pos = comma + 1;
  }
  return w;
}

}  // namespace bto
