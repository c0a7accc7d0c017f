#pragma once

#include <ostream>

namespace bto::cli {

/// Runs the `bto` command line. Exit codes: 0 success, 1 when the answer to
/// a yes/no query is "no", 2 for usage and input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bto::cli
