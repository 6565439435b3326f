#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qstir::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kMismatch = 3,
};

inline constexpr int kDefaultOrderCap = 8;

/// Runs one command line (without the program name) against the given
/// streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qstir::cli
