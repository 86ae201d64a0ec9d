#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpokit::cli {

// Runs one invocation. Exit codes: 0 all checks passed, 1 a mathematical
// check failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpokit::cli
