// Command-line driver.  Every computation in the library is reachable as a
// subcommand with deterministic, machine-readable output.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubical::cli {

// Runs one invocation; `args` excludes the program name.  Results go to
// `out`, diagnostics to `err`.  Returns 0 on success (and for verification
// commands, when the property holds), 1 when a verification fails, 2 on
// input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cubical::cli
