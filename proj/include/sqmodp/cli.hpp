#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqmodp::cli {

/// Process exit codes.
enum ExitStatus : int {
  kSuccess = 0,
  kInvalidArguments = 1,
  kDomainError = 2,
  kInternalError = 3,
};

/// Parses `argv` (program name first), runs exactly one subcommand and
/// writes its rendered output to `out`, or to the --out path. Diagnostics go
/// to `err`. Nothing is written to the output destination unless the whole
/// command succeeded.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace sqmodp::cli
