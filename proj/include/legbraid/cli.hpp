#pragma once

// Command-line front end.  `args` excludes the program name.  Exit codes:
// 0 success, 1 expectation or verification mismatch, 2 usage/guard errors.

#include <ostream>
#include <string>
#include <vector>

namespace legbraid {

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace legbraid
