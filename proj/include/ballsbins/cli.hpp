#pragma once

#include <iosfwd>

namespace ballsbins::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kIoError = 3,
  kGateFailure = 4,
};

/// Entry point of the `ballsbins` tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ballsbins::cli
