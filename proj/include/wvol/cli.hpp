#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wvol {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitDomain = 3,
  kExitInconclusive = 4,
  kExitMismatch = 5,
};

/// Runs the wvol command line (args excludes the program name). Records go
/// to `out`, diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wvol
