#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bookem {

// Command-line front end for the whole toolkit. args excludes the program
// name. Returns the process exit code: 0 success, 1 verification failure
// (verify --expect), 2 usage or input error, 3 budget exhausted (interval or
// timeout result). Writes artifacts to `out` unless -o/--output redirects
// them to a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bookem
