#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace meanconvex {

/// Runs one CLI invocation. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`. Returns 0 on pass, 1 on a mathematical violation
/// or domain error, 2 on a usage error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace meanconvex
