#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualrep::cli {

/// Full command-line entry point.  Returns the process exit code:
/// 0 success, 1 operation error, 2 input or I/O error, 3 a failed contract.
/// Diagnostics go to `err`; reports go to --out or stdout.
int run_cli(const std::vector<std::string>& args, std::ostream& err);

}  // namespace dualrep::cli
