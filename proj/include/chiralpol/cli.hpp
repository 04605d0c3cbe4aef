#pragma once

#include <iosfwd>

namespace chiralpol {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitOracleDeviation = 2,
  kExitInstability = 3,
};

/// Entry point of the `chiralpol` command-line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chiralpol
