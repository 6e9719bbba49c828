#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tgd::cli {

/// Exit codes: 0 success, 1 usage error, 2 domain or solver error.
/// Data goes to `out`; the single-line `error: <kind>: <detail>` message to `err`.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tgd::cli
