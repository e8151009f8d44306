#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deco::cli {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// exit status: 0 on success, 1 on verification failure, 2 on parse or
/// validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace deco::cli
