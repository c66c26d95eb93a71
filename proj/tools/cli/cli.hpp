#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bstick::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kCapExceeded = 3,
  kBudgetExceeded = 4,
  kIoError = 5,
};

struct Environment {
  // Value of BSTICK_SEED, if set.
  std::optional<std::string> seed;
};

/// Entry point of the `bstick` tool: subcommands exact, table, simulate,
/// verify. Records go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Environment& env = {});

/// Same, with argv[0] supplied internally.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace bstick::cli
