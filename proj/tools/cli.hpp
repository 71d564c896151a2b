#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubkit::cli {

// Runs one command (args exclude the program name) writing results to `out`
// and diagnostics to `err`.  Returns the process exit status: 0 on success
// and on verified-true reports, 2 when an emitted report has holds = false,
// 1 on usage errors and precondition violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubkit::cli
