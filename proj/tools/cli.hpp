#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace planch {

// Runs the planch command line on the given arguments (program name
// excluded) and streams. Returns the process exit code: 0 ok, 2 parse
// error, 3 validation or missing-data error, 4 unknown component selector,
// 5 singularity, 1 anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planch
