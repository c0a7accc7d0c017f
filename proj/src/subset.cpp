#include "bto/subset.hpp"

#include <charconv>
#include <stdexcept>

namespace bto {

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  if (bits_ == 0) return "-";
  std::string s;
  for (int e : elements()) {
    if (!s.empty()) s += ',';
    s += std::to_string(e);
  }
  return s;
}

Subset Subset::parse(std::string_view text, int max_element) {
  if (text == "-") return Subset{};
  if (text.empty()) throw std::invalid_argument("empty subset text (use '-' for the empty set)");
  Mask m = 0;
  int last = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad element '" + std::string(tok) + "'");
    if (value < 1 || value > max_element)
      throw std::invalid_argument("element " + std::to_string(value) + " out of range 1.." +
                                  std::to_string(max_element));
    if (value <= last) throw std::invalid_argument("elements must be strictly increasing");
    last = value;
    m |= Mask{1} << (value - 1);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Subset(m);
}

std::string DisjointPair::to_string() const { return left.to_string() + "<" + right.to_string(); }

DisjointPair DisjointPair::parse(std::string_view text, bool allow_empty) {
  const auto lt = text.find('<');
  if (lt == std::string_view::npos || text.find('<', lt + 1) != std::string_view::npos)
    throw std::invalid_argument("pair must have the form A<B");
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  const auto lhs = trim(text.substr(0, lt));
  const auto rhs = trim(text.substr(lt + 1));
  if (!allow_empty && (lhs.empty() || rhs.empty() || lhs == "-" || rhs == "-"))
    throw std::invalid_argument("pair sides must be nonempty");
  DisjointPair p{Subset::parse(lhs), Subset::parse(rhs)};
  if (!p.left.disjoint(p.right)) throw std::invalid_argument("pair sides must be disjoint");
  if (p.left.empty() && p.right.empty()) throw std::invalid_argument("pair sides are both empty");
  return p;
}

}  // namespace bto
