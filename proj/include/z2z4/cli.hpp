#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace z2z4::cli {

/// Runs one CLI command. args excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
/// inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2z4::cli
