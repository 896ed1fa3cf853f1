#pragma once

#include <string>
#include <vector>

namespace trinomial {

// Exit codes: 0 success, 1 validation error, 2 numerical failure,
// 3 verification failure. args excludes the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace trinomial
