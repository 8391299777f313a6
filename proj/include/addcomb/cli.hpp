#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace addcomb {

/// Exit statuses: 0 success, 1 a checker reported a violation, 2 usage or
/// parse error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addcomb
