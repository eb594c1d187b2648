#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cslkit {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitInputError = 2, kExitIoError = 3 };

/// Runs the command line (args excludes the program name). Output goes to out/err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cslkit
