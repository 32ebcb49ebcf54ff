#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valform::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valform::cli
