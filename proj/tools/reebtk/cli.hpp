#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reeb::cli {

inline constexpr double kDefaultTolerance = 1e-9;

enum ExitCode : int {
    kOk = 0,
    kComputationFailure = 1,
    kInputFailure = 2,
};

/// Runs one reebtk command. `args` excludes the program name. The JSON (or
/// --human) report goes to `out`, diagnostics to `err`.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reeb::cli
