#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

/// Full command-line entry point; exit code 0 on success, 1 on input or
/// validation failure, 2 on usage error. `in` backs the "-"/stdin file
/// argument so tests can drive pipes.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace toric
