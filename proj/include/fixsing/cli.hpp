#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fixsing::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, config_error = 2, numerical_failure = 3 };

// args excludes the program name. Tables go to `out` unless --out names a
// file; warnings and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fixsing::cli
