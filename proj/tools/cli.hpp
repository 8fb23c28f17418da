#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kdunkl::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kUndecided = 3 };

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdunkl::cli
