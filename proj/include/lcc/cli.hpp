#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcc {

// Exit status: 0 success, 1 mathematical infeasibility verdict, 2 usage or
// precondition error, 3 internal error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcc
