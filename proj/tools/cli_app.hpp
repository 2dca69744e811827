#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lanczos::cli {

enum exit_status : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_numeric = 3,
    exit_xcheck_failed = 4,
};

/// Runs one command line (args[0] is the program name). All output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lanczos::cli
