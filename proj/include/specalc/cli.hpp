#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specalc {

/// Runs one CLI invocation. args[0] is the program name. Returns 0 on
/// success, 1 on domain errors and 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specalc
