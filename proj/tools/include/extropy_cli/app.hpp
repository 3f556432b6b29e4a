#pragma once

#include <ostream>

namespace extropy::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsageError = 2,
  kWindowError = 3,
  kNotConverged = 4,
  kWriteFailed = 5,
};

/// Entry point of the `extropy` tool. Results go to `out` unless --output
/// names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extropy::cli
