#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "bto/enumerate.hpp"
#include "bto/omatroid.hpp"
#include "support.hpp"

using namespace bto;
using bto::testing::data_order;
using bto::testing::data_path;

namespace {

SignVector sv(const char* text) { return SignVector::parse(text, static_cast<int>(std::string(text).size())); }

std::vector<SignVector> nonzero(int n) {
  std::vector<SignVector> out;
  for (std::uint32_t i = 1; i < sign_vector_count(n); ++i) out.push_back(SignVector::from_index(i, n));
  return out;
}

// Canonical representatives (first nonzero entry +).
std::vector<SignVector> canonical_half(int n) {
  std::vector<SignVector> out;
  for (const SignVector& x : nonzero(n))
    if (x.at(std::countr_zero(x.plus | x.minus) + 1) > 0) out.push_back(x);
  return out;
}

// Weak cocircuit elimination straight from the definition.
bool naive_localization(const Signature& s) {
  const int n = s.n();
  const auto vs = nonzero(n);
  for (const SignVector& x : vs)
    for (const SignVector& y : vs) {
      if (s[x] < 0 || s[y] < 0 || y == -x) continue;
      const Cocircuit cx = cocircuit(x, n), cy = cocircuit(y, n);
      for (int e = 0; e < n * n; ++e) {
        if (!(cx.plus >> e & 1) || !(cy.minus >> e & 1)) continue;
        bool found = false;
        for (const SignVector& z : vs) {
          const Cocircuit cz = cocircuit(z, n);
          if (s[z] >= 0 && !((cz.plus | cz.minus) >> e & 1) && is_elimination_candidate(z, x, y, n)) found = true;
        }
        if (!found) return false;
      }
    }
  return true;
}

Signature signature_from_code(int n, std::uint64_t code) {
  Signature s(n);
  for (const SignVector& x : canonical_half(n)) {
    s.set_antisymmetric(x, static_cast<int>(code % 3) - 1);
    code /= 3;
  }
  return s;
}

}  // namespace

TEST_CASE("cocircuits") {
  CHECK(cocircuit(sv("++0"), 3).to_string(3) == "++0+++0++");
  CHECK(cocircuit(sv("+-"), 2).to_string(2) == "+-0+");
  CHECK_THROWS_AS(cocircuit(sv("000"), 3), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    std::set<Cocircuit> seen;
    for (const SignVector& x : nonzero(n)) {
      const Cocircuit c = cocircuit(x, n), m = cocircuit(-x, n);
      REQUIRE(m.plus == c.minus);
      REQUIRE(m.minus == c.plus);
      seen.insert(c);
    }
    CHECK(seen.size() == sign_vector_count(n) - 1);
  }
}

TEST_CASE("sign vector indexing") {
  for (int n = 1; n <= 4; ++n)
    for (std::uint32_t i = 0; i < sign_vector_count(n); ++i) REQUIRE(SignVector::from_index(i, n).index(n) == i);
  CHECK(sv("+-0").to_string(3) == "+-0");
  CHECK_THROWS_AS(SignVector::parse("+x", 2), std::invalid_argument);
  CHECK_THROWS_AS(SignVector::parse("+", 2), std::invalid_argument);
}

TEST_CASE("mu from orders") {
  const Signature binary = mu_from_order(binary_order(2));
  CHECK(binary[sv("+-")] == -1);
  CHECK(binary[sv("-+")] == 1);
  for (int n = 1; n <= 4; ++n)
    for (const TermOrder& o : enumerate_orders(n, EnumerationMode::all)) {
      const Signature mu = mu_from_order(o);
      for (int i = 1; i <= n; ++i) REQUIRE(mu[SignVector{Mask{1} << (i - 1), 0}] == 1);
      for (const SignVector& x : nonzero(n)) REQUIRE(mu[x] != 0);
    }
  const Signature example = mu_from_order(data_order("noncoherent_n5.bto"));
  CHECK(example[SignVector::from_sets(Subset::of({1, 2}), Subset::of({4}))] == 1);
}

TEST_CASE("orders induce localizations satisfying the mu conditions") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> signatures;
    for (const TermOrder& o : enumerate_orders(n, EnumerationMode::all)) {
      const Signature mu = mu_from_order(o);
      REQUIRE(check_localization(mu).ok);
      REQUIRE(check_mu_conditions(mu).ok());
      REQUIRE(partial_order_from_mu(mu).to_total() == o);
      std::vector<int> dense;
      for (std::uint32_t i = 0; i < sign_vector_count(n); ++i) dense.push_back(mu.at_index(i));
      signatures.insert(dense);
    }
    CHECK(signatures.size() == count_orders(n).total_count);
  }
}

TEST_CASE("the thirteen-vector extension") {
  const Signature s = parse_signature(read_text_file(data_path("extension_n3.sig")));
  CHECK(check_localization(s).ok);
  CHECK(naive_localization(s));
  const MuCheck m = check_mu_conditions(s);
  CHECK(m.failed_condition == 2);
  REQUIRE(m.witness.size() == 3);
  CHECK(m.witness[0] == sv("-+0"));
  CHECK(m.witness[1] == sv("0-+"));
  CHECK(m.witness[2] == sv("-0+"));
  CHECK(s[m.witness[2]] == -1);
  CHECK_THROWS_AS(partial_order_from_mu(s), std::invalid_argument);
}

TEST_CASE("localization check agrees with the definition on every n = 2 signature") {
  int failing = 0;
  for (std::uint64_t code = 0; code < 81; ++code) {
    const Signature s = signature_from_code(2, code);
    const LocalizationResult r = check_localization(s);
    REQUIRE(r.ok == naive_localization(s));
    if (!r.ok) {
      ++failing;
      REQUIRE(r.failure.has_value());
      const auto& f = *r.failure;
      const Cocircuit cx = cocircuit(f.x, 2), cy = cocircuit(f.y, 2);
      CHECK((cx.plus >> f.root & 1));
      CHECK((cy.minus >> f.root & 1));
    }
  }
  CHECK(failing > 0);
}

TEST_CASE("antisymmetry is required") {
  Signature s(2);
  for (const SignVector& x : canonical_half(2)) s.set_antisymmetric(x, 1);
  s.set(sv("-0"), 1);
  CHECK_THROWS_AS(check_localization(s), AntisymmetryError);
  const MuCheck m = check_mu_conditions(s);
  CHECK(m.failed_condition == 1);
}

TEST_CASE("elimination candidates satisfy the containments") {
  for (int n = 1; n <= 3; ++n)
    for (const SignVector& x : nonzero(n))
      for (const SignVector& y : nonzero(n))
        for (const SignVector& z : elimination_candidates(x, y)) REQUIRE(is_elimination_candidate(z, x, y, n));
  const auto self = elimination_candidates(sv("+-0"), sv("+-0"));
  CHECK(std::find(self.begin(), self.end(), sv("+-0")) != self.end());
  const auto crossed = elimination_candidates(sv("-+"), sv("+-"));
  CHECK_FALSE(crossed.empty());
  for (const SignVector& z : crossed) CHECK(is_elimination_candidate(z, sv("-+"), sv("+-"), 2));
}

TEST_CASE("mu conditions characterize generalized partial orders (n <= 3)") {
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < canonical_half(n).size(); ++i) total *= 3;
    std::uint64_t passing = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      const Signature s = signature_from_code(n, code);
      if (!check_mu_conditions(s).ok()) continue;
      ++passing;
      const PartialTermOrder p = partial_order_from_mu(s);
      REQUIRE(validate_partial(p).ok());
      REQUIRE(mu_from_order(p) == s);
      REQUIRE(check_localization(s).ok);
    }
    // Count generalized partial orders directly over all level maps.
    std::set<std::vector<int>> partial;
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<int> level(subsets, 0);
    while (true) {
      Mask used = 0;
      for (int v : level) used |= Mask{1} << v;
      if ((used & (used + 1)) == 0) {
        const PartialTermOrder p = PartialTermOrder::from_levels(n, level);
        if (validate_partial(p, 1).ok()) partial.insert(std::vector<int>(p.levels().begin(), p.levels().end()));
      }
      std::size_t i = 0;
      while (i < subsets && level[i] == static_cast<int>(subsets) - 1) level[i++] = 0;
      if (i == subsets) break;
      ++level[i];
    }
    CHECK(passing == partial.size());
  }
}

TEST_CASE("a signature that is zero except on one coordinate pattern") {
  Signature s(2);
  s.set_antisymmetric(sv("+0"), 1);
  const MuCheck m = check_mu_conditions(s);
  bool reconstructs = true;
  try {
    reconstructs = mu_from_order(partial_order_from_mu(s)) == s;
  } catch (const std::exception&) {
    reconstructs = false;
  }
  CHECK(m.ok() == reconstructs);
}

TEST_CASE("signature files") {
  const Signature mu = mu_from_order(binary_order(3));
  const std::string text = format_signature(mu);
  CHECK(text.starts_with("+00 +\n"));
  CHECK(parse_signature(text) == mu);
  CHECK_THROWS_AS(parse_signature("+0 +\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("+0 +\n-0 +\n0+ +\n++ +\n+- +\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("+0 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature(""), std::invalid_argument);
}
