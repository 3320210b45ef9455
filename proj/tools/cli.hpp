#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscitab::cli {

/// Runs one command-line invocation. args excludes the program name.
/// Exit codes: 0 success (and agreement in avg --mode both), 1 usage error
/// (malformed input, unknown formula id, empty tableau set), 2 verification
/// failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oscitab::cli
