#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeintorus::cli {

// Runs the command-line interface.  Exit codes: 0 on success, 1 when a
// verification or computation fails, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeintorus::cli
