#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effalg::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kMalformed = 2 };

/// Runs one command. `args` excludes the program name. Returns 0 for
/// success/true, 1 for property-false or infeasible, 2 for malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effalg::cli
