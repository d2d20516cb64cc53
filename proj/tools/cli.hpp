#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdyson::cli {

inline constexpr int kUsageError = 2;

/// Runs one command line (args exclude the program name); reports go to `out`,
/// diagnostics to `err`.  Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdyson::cli
