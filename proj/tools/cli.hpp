#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wmark::cli {

// Process exit codes. 0 only on full success.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kIoError = 3,
    kFormatError = 4,
    kDimensionError = 5,
    kKeyMismatch = 6,
    kParameterError = 7,
    kEmptySelection = 8,
    kInternalError = 9,
};

// Runs one command; args excludes the program name. Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wmark::cli
