#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sniplab {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/// Runs one sniplab command. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error (or a failed verification), 2 on a usage
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sniplab
