#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cedga::cli {

/// Exit codes: 0 the check held (or the command succeeded), 1 it did not,
/// 2 usage, input or parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cedga::cli
