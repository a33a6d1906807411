#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcf9::cli {

// Runs one CLI invocation. Exit codes: 0 success/valid, 1 invalid or
// infeasible, 2 input or usage error, 3 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pcf9::cli
