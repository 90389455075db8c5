#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homfly {

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitVerify = 3 };

/// Runs the command line `args` (without the program name). Input named "-"
/// is read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace homfly
