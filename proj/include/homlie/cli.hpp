#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie {

/// Parses and executes one command line (program name excluded).
/// Exit code 0: success, or every requested identity verified.
/// Exit code 1: a verification ran and found exact violations.
/// Exit code 2: usage error or invalid input.
/// Output is deterministic for a fixed argument vector.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace homlie
