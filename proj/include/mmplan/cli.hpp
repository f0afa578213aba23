#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mmplan {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadArgs = 1,
  kExitInvalidScenario = 2,
  kExitInfeasibleSizing = 3,
  kExitFiberInfeasible = 4,
};

/// A path to an existing file, or the name of a bundled scenario ("scenario1").
std::filesystem::path resolve_scenario(const std::string& ref);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmplan
