#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace z4::cli {

/// Process exit codes. Part of the command-line contract.
enum ExitCode : int {
    kSuccess = 0,
    kFail = 1,
    kUsage = 2,
    kDegenerate = 3,
    kGuard = 4,
    kNotCharacteristic = 5,
    kObstructed = 6,
    kInternal = 7,
};

/// Runs the command line given as args (args[0] is the program name). Reports go to
/// out, diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z4::cli
