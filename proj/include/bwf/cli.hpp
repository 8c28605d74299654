#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bwf::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kContractViolation = 3,
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bwf::cli
