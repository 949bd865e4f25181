#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subst::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kCapExceeded = 3,
  kCheckFailed = 4,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subst::cli
