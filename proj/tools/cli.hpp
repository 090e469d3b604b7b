#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieframe::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// args excludes the program name. Reports go to `out` unless --output names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieframe::cli
