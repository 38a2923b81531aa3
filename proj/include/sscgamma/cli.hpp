#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ssc {

// Exit statuses of the command-line tool.
enum ExitCode { exit_ok = 0, exit_validation = 1, exit_verification = 2, exit_internal = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssc
