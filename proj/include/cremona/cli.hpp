#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cremona {

// Runs the command line given args (without the program name), writing the
// payload to `out` and diagnostics to `err`. Returns the process exit code:
// 0 success, 1 verification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona
