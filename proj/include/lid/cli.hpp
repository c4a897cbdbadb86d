#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lid {

// Exit codes of the command-line tool.
enum exit_code : int { exit_ok = 0, exit_invalid = 1, exit_input = 2, exit_capacity = 3 };

/// Runs `lidcol` with argv[1..] in `args`. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lid
