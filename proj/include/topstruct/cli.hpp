#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topstruct {

/// Exit codes shared by every subcommand.
enum ExitCode { kExitPass = 0, kExitViolation = 1, kExitBudget = 2, kExitUsage = 64 };

/// Runs `decompose`, `verify` or `find`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topstruct
