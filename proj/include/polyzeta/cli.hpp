#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyzeta::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, domain_error = 3 };

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyzeta::cli
