#include "bto/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bto/enumerate.hpp"
#include "bto/parallel.hpp"

namespace bto {

namespace {

void require_size(int n, int max, const char* what) {
  if (n < 1 || n > max)
    throw std::invalid_argument(std::string(what) + ": n must be in 1.." + std::to_string(max));
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

// Bareiss elimination; entries stay bounded by minors of the input.
long long determinant(std::vector<std::vector<long long>> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && m[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < k; ++r) {
      for (std::size_t j = c + 1; j < k; ++j) m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

// Row-echelon basis over the integers, rows kept primitive.
class EchelonBasis {
 public:
  // Returns false (and leaves the basis unchanged) if v is in the span.
  bool insert(std::vector<long long> v) {
    reduce(v);
    const auto lead = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (lead == v.end()) return false;
    rows_.push_back(std::move(v));
    return true;
  }
  bool spans(std::vector<long long> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  static std::size_t lead_of(const std::vector<long long>& v) {
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; }) - v.begin());
  }
  void reduce(std::vector<long long>& v) const {
    for (const auto& row : rows_) {
      const std::size_t c = lead_of(row);
      if (v[c] == 0) continue;
      const long long a = row[c], b = v[c];
      long long g = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = v[j] * a - row[j] * b;
        g = std::gcd(g, v[j]);
      }
      if (g > 1)
        for (auto& x : v) x /= g;
    }
  }
  std::vector<std::vector<long long>> rows_;
};

std::vector<long long> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::string format_poly(const std::vector<mpz_class>& c, bool spaced) {
  std::string out;
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    const mpz_class& a = c[static_cast<std::size_t>(d)];
    if (a == 0) continue;
    const mpz_class mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += '-';
    } else {
      out += spaced ? (a < 0 ? " - " : " + ") : (a < 0 ? "-" : "+");
    }
    if (mag != 1 || d == 0) out += mag.get_str();
    if (d >= 1) out += 'x';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

// Synthetic division by (x - r); the remainder must already be known to be 0.
std::vector<mpz_class> divide_root(const std::vector<mpz_class>& c, const mpz_class& r) {
  std::vector<mpz_class> q(c.size() - 1);
  mpz_class carry = 0;
  for (std::size_t d = c.size() - 1; d-- > 0;) {
    carry = c[d + 1] + carry * r;
    q[d] = carry;
  }
  return q;
}

mpz_class eval(const std::vector<mpz_class>& c, const mpz_class& x) {
  mpz_class v = 0;
  for (std::size_t d = c.size(); d-- > 0;) v = v * x + c[d];
  return v;
}

struct PointCounter {
  int n;
  std::uint64_t q;
  std::vector<char> used;
  std::vector<std::uint32_t> sums;
  std::uint64_t leaves = 0;

  PointCounter(int n_, std::uint64_t q_) : n(n_), q(q_), used(q_, 0), sums(std::size_t{1} << n_, 0) {}

  // Places value v as coordinate k+1 given k placed coordinates.
  bool place(int k, std::uint64_t v) {
    const std::size_t half = std::size_t{1} << k;
    for (std::size_t i = 0; i < half; ++i) {
      std::uint32_t s = static_cast<std::uint32_t>((sums[i] + v) % q);
      if (used[s]) {
        unplace_partial(half, i);
        return false;
      }
      used[s] = 1;
      sums[half + i] = s;
    }
    return true;
  }
  void unplace_partial(std::size_t half, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) used[sums[half + i]] = 0;
  }
  void dfs(int k, std::uint64_t last) {
    if (k == n) {
      ++leaves;
      return;
    }
    for (std::uint64_t v = last + 1; v < q; ++v) {
      if (!place(k, v)) continue;
      dfs(k + 1, v);
      unplace_partial(std::size_t{1} << k, std::size_t{1} << k);
    }
  }
};

}  // namespace

std::string Normal::to_string() const {
  std::string s;
  for (int e : entries) s += e > 0 ? '+' : e < 0 ? '-' : '0';
  return s;
}

std::vector<Normal> normals(int n) {
  require_size(n, 12, "normals");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<Normal> out;
  out.reserve((total - 1) / 2);
  for (std::size_t code = 1; code < total; ++code) {
    Normal v;
    v.entries.resize(static_cast<std::size_t>(n));
    std::size_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) v.entries[static_cast<std::size_t>(i)] = c % 3 == 0 ? 0 : c % 3 == 1 ? 1 : -1;
    const auto first = std::find_if(v.entries.begin(), v.entries.end(), [](int e) { return e != 0; });
    if (*first == 1) out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> root_system(int n) {
  require_size(n, kMaxGroundSize, "root_system");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < un; ++i) {
    std::vector<int> v(un, 0);
    v[i] = 1;
    out.push_back(v);
  }
  for (int sign : {1, -1})
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = i + 1; j < un; ++j) {
        std::vector<int> v(un, 0);
        v[i] = 1;
        v[j] = sign;
        out.push_back(v);
      }
  return out;
}

Polynomial::Polynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<long>& roots) {
  Polynomial p({mpz_class(1)});
  for (long r : roots) p = p * Polynomial({mpz_class(-r), mpz_class(1)});
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

mpz_class Polynomial::evaluate(const mpz_class& x) const { return eval(coeffs_, x); }

std::string Polynomial::to_string() const { return format_poly(coeffs_, true); }

std::vector<long> Polynomial::integer_roots() const {
  std::vector<long> roots;
  std::vector<mpz_class> c = coeffs_;
  while (c.size() > 1 && c[0] == 0) {
    roots.push_back(0);
    c.erase(c.begin());
  }
  if (c.size() <= 1) return roots;
  const mpz_class c0 = abs(c[0]);
  if (!c0.fits_ulong_p()) return roots;
  const unsigned long m = c0.get_ui();
  std::vector<unsigned long> divisors;
  for (unsigned long d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      divisors.push_back(d);
      if (d != m / d) divisors.push_back(m / d);
    }
  for (unsigned long d : divisors)
    for (long r : {static_cast<long>(d), -static_cast<long>(d)})
      while (c.size() > 1 && eval(c, r) == 0) {
        roots.push_back(r);
        c = divide_root(c, r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string Polynomial::factored() const {
  const std::vector<long> roots = integer_roots();
  std::vector<mpz_class> rest = coeffs_;
  std::string out;
  for (long r : roots) {
    rest = divide_root(rest, r);
    if (r == 0) out += "x";
    else out += "(x" + std::string(r > 0 ? "-" : "+") + std::to_string(std::labs(r)) + ")";
  }
  if (rest.size() > 1) out += "(" + format_poly(rest, false) + ")";
  else if (rest.size() == 1 && rest[0] != 1) out = rest[0].get_str() + out;
  return out;
}

std::uint64_t count_generic_points(int n, std::uint64_t q, unsigned threads) {
  require_size(n, 10, "count_generic_points");
  if (q < 2) throw std::invalid_argument("count_generic_points: q must be at least 2");
  if (n == 1) return q - 1;
  // Count points with v_1 = 1 and v_2 < ... < v_n; scaling and permuting
  // coordinates act freely on the rest.
  std::vector<std::uint64_t> partial(q, 0);
  parallel_for(q - 2, threads, [&](unsigned, std::size_t i) {
    PointCounter counter(n, q);
    counter.used[0] = 1;
    counter.used[1] = 1;
    counter.sums[1] = 1;
    const std::uint64_t v2 = i + 2;
    if (!counter.place(2 - 1, v2)) return;
    counter.dfs(2, v2);
    partial[i] = counter.leaves;
  });
  const std::uint64_t chains = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  return chains * factorial(n - 1) * (q - 1);
}

std::vector<std::uint64_t> reduction_primes(int n) {
  require_size(n, 8, "reduction_primes");
  std::uint64_t power = 1;
  for (int i = 0; i < n; ++i) power *= static_cast<std::uint64_t>(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2 * static_cast<std::uint64_t>(n) + 1; out.size() < static_cast<std::size_t>(n) + 2; ++p)
    if (p * p > power && is_prime(p)) out.push_back(p);
  return out;
}

CharPolyResult char_poly(int n, unsigned threads) {
  CharPolyResult result;
  result.primes = reduction_primes(n);
  for (std::uint64_t p : result.primes) result.counts.push_back(count_generic_points(n, p, threads));

  std::string used;
  for (std::uint64_t p : result.primes) used += (used.empty() ? "" : ",") + std::to_string(p);
  const auto fail = [&](const std::string& why) {
    throw ArrangementError("char_poly(" + std::to_string(n) + "): " + why + " (primes " + used + ")");
  };

  for (std::size_t k = 0; k < result.primes.size(); ++k)
    if (result.counts[k] % (result.primes[k] - 1) != 0) fail("count at " + std::to_string(result.primes[k]) + " not divisible by q-1");

  // Lagrange interpolation through the first n+1 points.
  const std::size_t pts = static_cast<std::size_t>(n) + 1;
  std::vector<mpq_class> coeff(pts, 0);
  for (std::size_t j = 0; j < pts; ++j) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t m = 0; m < pts; ++m) {
      if (m == j) continue;
      const mpq_class xm = mpz_class(std::to_string(result.primes[m]));
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xm;
      }
      basis = std::move(next);
      denom *= mpq_class(mpz_class(std::to_string(result.primes[j]))) - xm;
    }
    const mpq_class scale = mpq_class(mpz_class(std::to_string(result.counts[j]))) / denom;
    for (std::size_t d = 0; d < pts; ++d) coeff[d] += basis[d] * scale;
  }
  std::vector<mpz_class> ints;
  for (auto& c : coeff) {
    c.canonicalize();
    if (c.get_den() != 1) fail("interpolant has non-integer coefficient " + c.get_str());
    ints.push_back(c.get_num());
  }
  result.poly = Polynomial(std::move(ints));
  if (result.poly.degree() != n || result.poly.coefficients().back() != 1) fail("interpolant is not monic of degree n");
  const mpz_class check = result.poly.evaluate(mpz_class(std::to_string(result.primes.back())));
  if (check != mpz_class(std::to_string(result.counts.back())))
    fail("check prime " + std::to_string(result.primes.back()) + " gives " + std::to_string(result.counts.back()) +
         " points but the interpolant predicts " + check.get_str());
  if (result.poly.evaluate(1) != 0) fail("chi(1) is not zero");
  return result;
}

Polynomial char_poly_mobius(int n) {
  require_size(n, 4, "char_poly_mobius");
  std::vector<std::vector<long long>> h;
  for (const Normal& v : normals(n)) h.push_back(widen(v.entries));
  using Flat = std::uint64_t;  // set of hyperplanes containing the subspace

  std::map<Flat, int> rank_of{{0, 0}};
  std::vector<std::vector<Flat>> by_rank(static_cast<std::size_t>(n) + 1);
  by_rank[0].push_back(0);
  for (int r = 0; r < n; ++r) {
    for (Flat f : by_rank[static_cast<std::size_t>(r)]) {
      EchelonBasis base;
      for (std::size_t i = 0; i < h.size(); ++i)
        if (f >> i & 1) base.insert(h[i]);
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (f >> i & 1) continue;
        EchelonBasis grown = base;
        grown.insert(h[i]);
        Flat closure = 0;
        for (std::size_t j = 0; j < h.size(); ++j)
          if (grown.spans(h[j])) closure |= Flat{1} << j;
        if (rank_of.emplace(closure, r + 1).second) by_rank[static_cast<std::size_t>(r) + 1].push_back(closure);
      }
    }
  }

  std::map<Flat, mpz_class> mu;
  std::vector<mpz_class> chi(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 0; r <= n; ++r)
    for (Flat f : by_rank[static_cast<std::size_t>(r)]) {
      mpz_class m = r == 0 ? 1 : 0;
      for (const auto& [g, mg] : mu)
        if (g != f && (g & ~f) == 0) m -= mg;
      mu[f] = m;
      chi[static_cast<std::size_t>(n - r)] += m;
    }
  return Polynomial(std::move(chi));
}

mpz_class region_count(const Polynomial& chi) { return abs(chi.evaluate(-1)); }

mpz_class region_count(int n, unsigned threads) { return region_count(char_poly(n, threads).poly); }

std::vector<std::vector<int>> hyperplane_spanning_roots(const Normal& normal) {
  const std::size_t n = normal.entries.size();
  std::vector<std::size_t> pos, neg;
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (normal.entries[i] > 0) pos.push_back(i);
    else if (normal.entries[i] < 0) neg.push_back(i);
    else {
      std::vector<int> v(n, 0);
      v[i] = 1;
      out.push_back(v);
    }
  }
  for (const auto* side : {&pos, &neg})
    for (std::size_t a = 0; a < side->size(); ++a)
      for (std::size_t b = a + 1; b < side->size(); ++b) {
        std::vector<int> v(n, 0);
        v[(*side)[a]] = 1;
        v[(*side)[b]] = -1;
        out.push_back(v);
      }
  for (std::size_t i : pos)
    for (std::size_t j : neg) {
      std::vector<int> v(n, 0);
      v[i] = 1;
      v[j] = 1;
      out.push_back(v);
    }
  return out;
}

int integer_rank(const std::vector<std::vector<int>>& rows) {
  EchelonBasis b;
  for (const auto& r : rows) b.insert(widen(r));
  return static_cast<int>(b.rank());
}

DiscriminantalReport verify_discriminantal(int n) {
  require_size(n, 6, "verify_discriminantal");
  DiscriminantalReport report;
  const auto roots = root_system(n);
  const auto is_root = [&](const std::vector<int>& v) {
    std::vector<int> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](int x) { return -x; });
    return std::find(roots.begin(), roots.end(), v) != roots.end() ||
           std::find(roots.begin(), roots.end(), neg) != roots.end();
  };

  for (const Normal& normal : normals(n)) {
    ++report.normals_checked;
    const auto span = hyperplane_spanning_roots(normal);
    for (const auto& v : span)
      if (!is_root(v) || dot(v, normal.entries) != 0) {
        report.ok = false;
        report.failure = "spanning vector for normal " + normal.to_string() + " is not an orthogonal root";
        return report;
      }
    if (integer_rank(span) != n - 1) {
      report.ok = false;
      report.failure = "roots orthogonal to " + normal.to_string() + " do not span its hyperplane";
      return report;
    }
  }

  if (n == 1) return report;
  const std::size_t k = static_cast<std::size_t>(n) - 1;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<long long> cof(static_cast<std::size_t>(n));
    long long g = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(n); ++col) {
      std::vector<std::vector<long long>> minor(k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
          if (c != col) minor[r].push_back(roots[pick[r]][c]);
      cof[col] = (col % 2 ? -1 : 1) * determinant(std::move(minor));
      g = std::gcd(g, cof[col]);
    }
    if (g != 0) {
      ++report.spanning_sets_checked;
      for (auto& c : cof) c /= g;
      if (std::any_of(cof.begin(), cof.end(), [](long long c) { return c < -1 || c > 1; })) {
        std::ostringstream msg;
        msg << "hyperplane spanned by roots";
        for (std::size_t r : pick) msg << ' ' << r + 1;
        msg << " has normal (";
        for (std::size_t c = 0; c < cof.size(); ++c) msg << (c ? "," : "") << cof[c];
        msg << ")";
        report.ok = false;
        report.failure = msg.str();
        return report;
      }
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == roots.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return report;
}

}  // namespace bto
