#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace og6::cli {

/// Runs og6lat with the given arguments (without the program name).
/// Exit codes: 0 computed, 2 precondition error, 1 internal failure or a
/// failing claim.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace og6::cli
