#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamming::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegativeVerdict = 1,
  kUsageError = 2,
  kResourceExhausted = 3,
};

// Runs one invocation. args[0] is the program name. Payloads go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamming::cli
