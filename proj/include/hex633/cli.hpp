#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hex633 {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hex633
