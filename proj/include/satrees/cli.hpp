#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satrees {

/// Parses and runs one CLI invocation (arguments without the program name).
/// Exit status: 0 success, 1 computational failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace satrees
