#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crgstir {

enum ExitCode { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitCap = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace crgstir
