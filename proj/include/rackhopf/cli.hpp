#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rackhopf {

constexpr const char* kToolVersion = "1.0.0";

// Runs one command line (without the program name). The JSON report goes to `out`, diagnostics to
// `err`. Exit codes: 0 success, 1 assertion failed, 2 invalid input, 3 resource budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackhopf
