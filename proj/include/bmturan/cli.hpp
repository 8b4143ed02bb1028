#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmturan {

/// Exit codes: 0 all pass, 1 a mathematical check failed, 2 operational error.
enum ExitCode : int { ExitPass = 0, ExitCheckFailed = 1, ExitError = 2 };

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics and summaries to `err`; `in` backs `report -`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace bmturan
