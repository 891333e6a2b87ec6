#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucas {

/// Exit codes returned by run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitProtocol = 3,
  kExitIo = 4,
};

/// Entry point behind the `lucas` executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucas
