#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pisz::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kIoFailure = 1,
    kParseError = 2,
    kDisconnected = 3,
    kCheckFailed = 4,
    kUsage = 64,
};

/// Runs the command line `args` (without the program name). Standard input
/// is `in` unless --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pisz::cli
