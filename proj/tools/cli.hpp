#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skelkit::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,     // parse and argument errors
  kCapacity = 3,
};

/// Runs one invocation. `args` excludes the program name. Graph input comes
/// from the positional path, or from `in` when it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace skelkit::cli
