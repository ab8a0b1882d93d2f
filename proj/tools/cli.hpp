#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knarayana::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_inconsistent = 2,  // methods disagree or an identity fails
  exit_usage = 64,
  exit_budget = 65,
};

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knarayana::cli
