#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doublestar::cli {

// Full command-line front end, factored out of main() so tests can drive it
// in-process. Subcommands: bounds, verify, extract, construct, search exact,
// search witness. Every subcommand prints a human-readable block followed by
// one machine-readable key=value line on `out`; timing goes to `err` only,
// keeping `out` byte-stable run to run.
//
// Exit codes: 0 found/success, 1 nothing found / undetermined, 2 usage or
// input error, 3 counterexample alarm.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace doublestar::cli
