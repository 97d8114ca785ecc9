#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace escrate::cli {

// Runs one CLI invocation. argv follows main() conventions minus the program
// name. Returns the process exit code: 0 success, 1 domain error, 2 usage
// error. All normal output goes to `out`, errors to `err`.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace escrate::cli
