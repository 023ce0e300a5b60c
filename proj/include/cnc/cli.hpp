#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cnc::cli {

/// Runs one command. `args` is the argument list without the program name.
/// Exit status: 0 success, 1 negative verdict, 2 usage/parse error, 3 size
/// guard.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cnc::cli
