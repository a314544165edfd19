#pragma once

#include <iosfwd>

namespace burn::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailed = 1,
  kMalformedInput = 2,
  kBudgetExhausted = 3,
};

/// Entry point of the `burn` tool. Writes results to `out`, diagnostics to
/// `err`, and returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace burn::cli
