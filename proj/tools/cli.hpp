#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tricenter::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInputOrSolverError = 2 };

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics and error objects to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricenter::cli
