#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spr::cli {

enum ExitStatus : int {
    kOk = 0,
    kNo = 1,
    kUsage = 2,
    kCapExceeded = 3,
};

// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spr::cli
