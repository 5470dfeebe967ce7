#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kwise::cli {

enum ExitCode : int { kOk = 0, kRejected = 1, kInvalid = 2 };

/// Runs one command line (args excludes the program name). JSON goes to out,
/// CLI11 help and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kwise::cli
