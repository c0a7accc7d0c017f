#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "bto/order_io.hpp"
#include "bto/term_order.hpp"

namespace bto::testing {

inline std::string data_path(const std::string& name) { return std::string(BTO_DATA_DIR) + "/" + name; }

inline TermOrder data_order(const std::string& name) { return read_order_file(data_path(name)); }

/// Whitespace-separated subsets such as "- 1 2 1,2".
inline std::vector<Subset> subsets(const std::string& text) {
  std::vector<Subset> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(Subset::parse(token));
  return out;
}

}  // namespace bto::testing
