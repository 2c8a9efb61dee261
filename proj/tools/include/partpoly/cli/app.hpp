#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partpoly::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
  kComputation = 3,
  kEmptyOverlap = 4,
};

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// progress and warnings to `err`. Failures print a JSON error object to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partpoly::cli
