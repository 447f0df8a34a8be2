#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace renyi::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 computation or validation error, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace renyi::cli
