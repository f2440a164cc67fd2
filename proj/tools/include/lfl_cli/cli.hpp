#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfl::io {

/// Runs one command. `args` excludes the program name. Exit codes: 0 on
/// success, 1 for computational errors, 2 for usage/validation errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version_string() noexcept;

}  // namespace lfl::io
