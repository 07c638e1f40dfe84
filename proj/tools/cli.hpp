#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvegraph::cli {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 success, 1 domain error (JSON error object on `err`), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace curvegraph::cli
