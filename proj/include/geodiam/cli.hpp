#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geodiam {

// args excludes the program name. Exit codes: 0 success, 1 input or
// validation error, 2 numeric failure or an exhausted budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geodiam
