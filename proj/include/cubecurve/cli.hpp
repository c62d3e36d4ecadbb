#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubecurve::cli {

/// Process exit codes. Never conflated: a usage problem is not a failed check.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

/// Runs one CLI invocation. args excludes the program name. Reads the
/// CUBECURVE_CAP environment variable for the default enumeration cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubecurve::cli
