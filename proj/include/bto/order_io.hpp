#pragma once

// Text format for orders (".bto"):
//
//   n=5          optional header
//   -            the empty set
//   1            one subset per line, in increasing order
//   1,3          comma-separated, strictly increasing, no spaces
//   # comment    comment and blank lines are skipped
//
// Without a header, n is the largest element seen. Partial orders use the
// same format with `=` joining subsets that share a level: `2=3`.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bto/term_order.hpp"

namespace bto {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Groups of subsets, one group per level, in increasing order.
struct LeveledSubsets {
  int n = 0;
  std::vector<std::vector<Subset>> levels;
};

/// Reads the level structure shared by total and partial order files. Every
/// subset of [n] must appear exactly once.
LeveledSubsets parse_levels(std::string_view text);

TermOrder parse_order(std::string_view text);
std::string serialize_order(const TermOrder& order);

TermOrder read_order_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace bto
