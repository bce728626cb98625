#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace billiard::cli {

/// Runs one command line (without the program name).
/// Exit codes: 0 success, 2 invalid input, 1 internal failure or failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace billiard::cli
