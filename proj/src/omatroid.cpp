#include "bto/omatroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bto {

namespace {

constexpr int kMaxSignSize = 8;

void check_sign_size(int n) {
  if (n < 1 || n > kMaxSignSize) throw std::invalid_argument("sign vectors: n must be in 1.." + std::to_string(kMaxSignSize));
}

int sgn(int v) { return (v > 0) - (v < 0); }

char sign_char(int v) { return v > 0 ? '+' : v < 0 ? '-' : '0'; }

int parse_sign(char c) {
  switch (c) {
    case '+': return 1;
    case '-': return -1;
    case '0': return 0;
    default: throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
}

std::vector<Cocircuit> cocircuit_table(int n) {
  const std::uint32_t count = sign_vector_count(n);
  std::vector<Cocircuit> table(count);
  for (std::uint32_t i = 1; i < count; ++i) table[i] = cocircuit(SignVector::from_index(i, n), n);
  return table;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

SignVector SignVector::from_sets(Subset plus, Subset minus) {
  if (!plus.disjoint(minus)) throw std::invalid_argument("sign vector: X+ and X- overlap");
  return {plus.bits(), minus.bits()};
}

SignVector SignVector::parse(std::string_view text, int n) {
  if (static_cast<int>(text.size()) != n)
    throw std::invalid_argument("sign vector '" + std::string(text) + "' should have length " + std::to_string(n));
  SignVector x;
  for (int i = 0; i < n; ++i) {
    const int s = parse_sign(text[static_cast<std::size_t>(i)]);
    if (s > 0) x.plus |= Mask{1} << i;
    if (s < 0) x.minus |= Mask{1} << i;
  }
  return x;
}

SignVector SignVector::from_index(std::uint32_t index, int n) {
  SignVector x;
  for (int i = 0; i < n; ++i, index /= 3) {
    if (index % 3 == 1) x.plus |= Mask{1} << i;
    if (index % 3 == 2) x.minus |= Mask{1} << i;
  }
  return x;
}

std::uint32_t SignVector::index(int n) const {
  std::uint32_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = v * 3 + ((plus >> i & 1) ? 1 : (minus >> i & 1) ? 2 : 0);
  return v;
}

std::string SignVector::to_string(int n) const {
  std::string s;
  for (int i = 1; i <= n; ++i) s += sign_char(at(i));
  return s;
}

std::uint32_t sign_vector_count(int n) {
  check_sign_size(n);
  std::uint32_t c = 1;
  for (int i = 0; i < n; ++i) c *= 3;
  return c;
}

std::string Cocircuit::to_string(int n) const {
  std::string s;
  for (int k = 0; k < n * n; ++k) s += (plus >> k & 1) ? '+' : (minus >> k & 1) ? '-' : '0';
  return s;
}

Cocircuit cocircuit(const SignVector& x, int n) {
  check_sign_size(n);
  if (x.zero()) throw std::invalid_argument("cocircuit of the zero sign vector");
  Cocircuit c;
  int k = 0;
  const auto put = [&](int s) {
    if (s > 0) c.plus |= std::uint64_t{1} << k;
    if (s < 0) c.minus |= std::uint64_t{1} << k;
    ++k;
  };
  for (int i = 1; i <= n; ++i) put(x.at(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) put(sgn(x.at(i) + x.at(j)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) put(sgn(x.at(i) - x.at(j)));
  return c;
}

Signature::Signature(int n) : n_(n), values_(sign_vector_count(n), 0) {}

void Signature::set_antisymmetric(const SignVector& x, int value) {
  set(x, value);
  set(-x, -value);
}

Signature mu_from_order(const TermOrder& order) {
  if (!is_valid(order)) throw InvalidOrder("mu_from_order: order violates the term order axioms");
  Signature mu(order.n());
  const std::uint32_t count = sign_vector_count(order.n());
  for (std::uint32_t i = 1; i < count; ++i) {
    const SignVector x = SignVector::from_index(i, order.n());
    mu.set(x, order.precedes(Subset(x.minus), Subset(x.plus)) ? 1 : -1);
  }
  return mu;
}

Signature mu_from_order(const PartialTermOrder& order) {
  if (!validate_partial(order, 1).ok())
    throw InvalidOrder("mu_from_order: not a generalized partial term order");
  Signature mu(order.n());
  const std::uint32_t count = sign_vector_count(order.n());
  for (std::uint32_t i = 1; i < count; ++i) {
    const SignVector x = SignVector::from_index(i, order.n());
    mu.set(x, sgn(order.level(x.plus) - order.level(x.minus)));
  }
  return mu;
}

namespace {

void require_antisymmetric(const Signature& sigma) {
  const int n = sigma.n();
  const std::uint32_t count = sign_vector_count(n);
  for (std::uint32_t i = 1; i < count; ++i) {
    const SignVector x = SignVector::from_index(i, n);
    if (sigma[-x] != -sigma[x])
      throw AntisymmetryError("signature is not antisymmetric at " + x.to_string(n));
  }
}

}  // namespace

LocalizationResult check_localization(const Signature& sigma) {
  require_antisymmetric(sigma);
  const int n = sigma.n();
  const std::uint32_t count = sign_vector_count(n);
  const auto table = cocircuit_table(n);
  const std::uint64_t all_roots = n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;

  std::vector<std::uint32_t> nonneg;
  for (std::uint32_t i = 1; i < count; ++i)
    if (sigma.at_index(i) >= 0) nonneg.push_back(i);

  for (std::uint32_t xi : nonneg) {
    const SignVector x = SignVector::from_index(xi, n);
    const std::uint32_t neg_x = (-x).index(n);
    for (std::uint32_t yi : nonneg) {
      if (yi == neg_x) continue;
      const Cocircuit &cx = table[xi], &cy = table[yi];
      const std::uint64_t separating = cx.plus & cy.minus;
      if (separating == 0) continue;
      const std::uint64_t up = cx.plus | cy.plus, down = cx.minus | cy.minus;
      std::uint64_t covered = 0;
      for (std::uint32_t zi : nonneg) {
        const Cocircuit& cz = table[zi];
        if ((cz.plus & ~up) == 0 && (cz.minus & ~down) == 0) covered |= all_roots & ~(cz.plus | cz.minus);
      }
      const std::uint64_t missing = separating & ~covered;
      if (missing != 0)
        return {false, EliminationFailure{x, SignVector::from_index(yi, n), std::countr_zero(missing)}};
    }
  }
  return {};
}

std::vector<SignVector> elimination_candidates(const SignVector& x, const SignVector& y) {
  const Mask xs = x.plus | x.minus, ys = y.plus | y.minus;
  const Mask a = x.minus & ~ys, b = x.plus & ~ys, c = y.minus & ~xs, d = y.plus & ~xs;
  const Mask m = x.minus & y.minus, p = x.plus & y.plus;
  const Mask mx = x.minus & y.plus, my = x.plus & y.minus;  // x and y of the decomposition
  std::vector<SignVector> raw{
      {p, m}, {b | p, a | m}, {d | p, c | m}, {b | d | p | my, a | c | m | mx}, {b | d | p | mx, a | c | m | my}};
  if (m == 0 && p == 0) raw.push_back({b | d, a | c});
  std::vector<SignVector> out;
  for (const SignVector& z : raw)
    if (!z.zero() && std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  return out;
}

bool is_elimination_candidate(const SignVector& z, const SignVector& x, const SignVector& y, int n) {
  const Cocircuit cz = cocircuit(z, n), cx = cocircuit(x, n), cy = cocircuit(y, n);
  return (cz.plus & ~(cx.plus | cy.plus)) == 0 && (cz.minus & ~(cx.minus | cy.minus)) == 0;
}

std::optional<SignVector> addition_composite(const SignVector& x, const SignVector& y) {
  if ((x.plus & y.plus) != 0 || (x.minus & y.minus) != 0) return std::nullopt;
  const Mask xs = x.plus | x.minus, ys = y.plus | y.minus;
  return SignVector{(x.plus & ~ys) | (y.plus & ~xs), (x.minus & ~ys) | (y.minus & ~xs)};
}

MuCheck check_mu_conditions(const Signature& mu) {
  const int n = mu.n();
  const std::uint32_t count = sign_vector_count(n);
  for (std::uint32_t i = 1; i < count; ++i) {
    const SignVector x = SignVector::from_index(i, n);
    if (mu[-x] != -mu[x]) return {1, {x, -x}};
  }
  std::vector<SignVector> positive, zero;
  for (std::uint32_t i = 1; i < count; ++i) {
    const SignVector x = SignVector::from_index(i, n);
    if (mu.at_index(i) > 0) positive.push_back(x);
    if (mu.at_index(i) == 0) zero.push_back(x);
  }
  for (int condition : {2, 3}) {
    for (const SignVector& x : condition == 2 ? positive : zero)
      for (const SignVector& y : positive) {
        const auto z = addition_composite(x, y);
        if (z && !z->zero() && mu[*z] <= 0) return {condition, {x, y, *z}};
      }
  }
  return {};
}

PartialTermOrder partial_order_from_mu(const Signature& mu) {
  const int n = mu.n();
  const Mask full = full_mask(n);
  const auto compare = [&](Mask a, Mask b) {  // -1: a < b, 1: b < a, 0: tied
    if (a == b) return 0;
    return -mu[SignVector{b & ~a, a & ~b}];
  };
  std::vector<int> below(std::size_t{full} + 1, 0);
  for (Mask a = 0; a <= full; ++a)
    for (Mask b = 0; b <= full; ++b)
      if (compare(b, a) < 0) ++below[a];
  const PartialTermOrder p = PartialTermOrder::from_levels(n, below);
  for (Mask a = 0; a <= full; ++a)
    for (Mask b = 0; b <= full; ++b)
      if (compare(a, b) != sgn(p.level(a) - p.level(b)))
        throw std::invalid_argument("signature does not describe an ordered partition of the subsets (at " +
                                    Subset(a).to_string() + " vs " + Subset(b).to_string() + ")");
  return p;
}

std::string format_signature(const Signature& sigma) {
  const int n = sigma.n();
  const std::uint32_t count = sign_vector_count(n);
  std::string out;
  for (std::uint32_t i = 1; i < count; ++i) {
    const SignVector x = SignVector::from_index(i, n);
    if (x.at(std::countr_zero(x.plus | x.minus) + 1) < 0) continue;
    out += x.to_string(n) + ' ' + sign_char(sigma.at_index(i)) + '\n';
  }
  return out;
}

Signature parse_signature(std::string_view text) {
  int n = 0;
  std::vector<std::pair<SignVector, int>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "signature line " + std::to_string(line_no) + ": ";
    const auto space = line.find(' ');
    if (space == std::string_view::npos) throw std::invalid_argument(where + "expected '<signs> <value>'");
    const std::string_view signs = line.substr(0, space), value = trim(line.substr(space + 1));
    if (n == 0) {
      n = static_cast<int>(signs.size());
      check_sign_size(n);
    }
    try {
      const SignVector x = SignVector::parse(signs, n);
      if (x.zero()) throw std::invalid_argument("zero sign vector");
      if (value.size() != 1) throw std::invalid_argument("value must be +, - or 0");
      entries.emplace_back(x, parse_sign(value.front()));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  if (n == 0) throw std::invalid_argument("signature file is empty");

  Signature sigma(n);
  std::vector<char> assigned(sign_vector_count(n), 0);
  for (const auto& [x, v] : entries) {
    for (const auto& [y, w] : {std::pair{x, v}, std::pair{-x, -v}}) {
      const std::uint32_t i = y.index(n);
      if (assigned[i] && sigma.at_index(i) != w)
        throw std::invalid_argument("signature assigns conflicting values to " + y.to_string(n));
      assigned[i] = 1;
      sigma.set(y, w);
    }
  }
  for (std::uint32_t i = 1; i < assigned.size(); ++i)
    if (!assigned[i])
      throw std::invalid_argument("signature has no value for " + SignVector::from_index(i, n).to_string(n));
  return sigma;
}

}  // namespace bto
