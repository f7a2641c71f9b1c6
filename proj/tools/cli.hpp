#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toriclab::cli {

enum ExitCode { ok = 0, failure = 1, input_error = 2, hypothesis_violation = 3, usage = 64 };

/// Runs one command line (without the program name) against the given
/// streams and returns the process exit code.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace toriclab::cli
