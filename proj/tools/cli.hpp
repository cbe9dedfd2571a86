#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contlog::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPrecisionExhausted = 3,
  kBudgetOrTolerance = 4,
};

// Runs one subcommand.  `args` excludes the program name.  Results go to
// `out` (or to the --out file); diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contlog::cli
