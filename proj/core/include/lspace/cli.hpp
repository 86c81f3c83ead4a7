#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lspace::cli {

/// Command dispatch for the lspace tool. Exit codes: 0 success, 2 parse or
/// usage errors, 3 precondition violations; verdicts never change the code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lspace::cli
