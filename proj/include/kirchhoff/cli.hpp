#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kirchhoff {

// Exit codes of the kirchhoff-lab front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitDisconnected = 3,
  kExitUnknownVertex = 4,
};

/// Runs one command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kirchhoff
