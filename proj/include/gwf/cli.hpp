#pragma once

#include <iosfwd>

namespace gwf {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
};

/// Entry point of the `gwf` command line. Summaries go to `out`, warnings
/// and errors to `err`; files are written only under --out.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwf
