#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pmatch::cli {

/// Runs the command-line tool: args is argv without the program name.
/// Returns the process exit code: 0 on success, 1 on bad input or bad
/// arguments, 2 when an internal invariant is violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmatch::cli
