#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polygroth {

/// Runs one command line (without the program name). Returns the exit
/// code: 0 success, 1 domain or other engine error, 2 parse or usage error,
/// 3 resource cap exceeded. verify-suite returns 1 when a check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polygroth
