#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tot::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kDomainError = 2 };

/// Runs the command line (args excludes the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tot::cli
