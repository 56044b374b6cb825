#pragma once

#include <ostream>

namespace aristotle::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Entry point shared by the executable and the tests. Subcommands:
/// verify, simulate, orbit, act. Never returns anything but an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aristotle::cli
