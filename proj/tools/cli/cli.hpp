#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpa::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 usage error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace mpa::cli
