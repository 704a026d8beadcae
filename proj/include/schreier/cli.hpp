#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schreier/verify.hpp"

namespace schreier::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
/// Output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ClosedFormTable& table = ClosedFormTable::standard());

}  // namespace schreier::cli
