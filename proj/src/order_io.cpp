#include "bto/order_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bto {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

LeveledSubsets parse_levels(std::string_view text) {
  LeveledSubsets out;
  int declared_n = -1;
  int max_element = 0;
  int line_no = 0;
  bool seen_content = false;
  std::vector<int> group_lines;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("n=")) {
      if (seen_content) throw ParseError(line_no, "header must precede the subsets");
      const auto digits = line.substr(2);
      int value = -1;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0 || value > kMaxGroundSize)
        throw ParseError(line_no, "bad header '" + std::string(line) + "'");
      declared_n = value;
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::vector<Subset> group;
    std::size_t start = 0;
    while (true) {
      const std::size_t eq = line.find('=', start);
      const auto token = line.substr(start, eq == std::string_view::npos ? line.npos : eq - start);
      try {
        group.push_back(Subset::parse(token, declared_n >= 0 ? declared_n : kMaxGroundSize));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      if (!group.back().empty())
        max_element = std::max(max_element, 32 - std::countl_zero(group.back().bits()));
      if (eq == std::string_view::npos) break;
      start = eq + 1;
    }
    out.levels.push_back(std::move(group));
    group_lines.push_back(line_no);
  }

  out.n = declared_n >= 0 ? declared_n : max_element;
  const std::size_t expected = std::size_t{1} << out.n;
  std::size_t total = 0;
  for (const auto& g : out.levels) total += g.size();
  if (total != expected)
    throw ParseError(0, "expected " + std::to_string(expected) + " subsets, found " + std::to_string(total));

  std::vector<bool> seen(expected, false);
  for (std::size_t g = 0; g < out.levels.size(); ++g) {
    for (Subset s : out.levels[g]) {
      if (seen[s.bits()]) throw ParseError(group_lines[g], "duplicate subset " + s.to_string());
      seen[s.bits()] = true;
    }
  }
  return out;
}

TermOrder parse_order(std::string_view text) {
  LeveledSubsets parsed = parse_levels(text);
  std::vector<Subset> seq;
  for (const auto& g : parsed.levels) {
    if (g.size() != 1) throw ParseError(0, "a total order cannot have tied subsets ('=')");
    seq.push_back(g.front());
  }
  return TermOrder::from_sequence(parsed.n, seq);
}

std::string serialize_order(const TermOrder& order) {
  std::string out = "n=" + std::to_string(order.n()) + "\n";
  for (std::size_t p = 0; p < order.size(); ++p) {
    out += order.at(p).to_string();
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TermOrder read_order_file(const std::filesystem::path& path) { return parse_order(read_text_file(path)); }

}  // namespace bto
