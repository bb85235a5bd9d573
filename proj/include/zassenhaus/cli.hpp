#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zassenhaus {

/// Runs one CLI command (args exclude the program name) and writes to the
/// given streams. Exit-code contract: 0 success, 1 verification failure,
/// 2 usage or input error.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace zassenhaus
