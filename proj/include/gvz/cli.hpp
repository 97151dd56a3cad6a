#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvz::cli {

enum ExitCode : int {
  kPass = 0,
  kPropertyFails = 1,
  kInputError = 2,
  kResourceError = 3,
  kHypothesisNotMet = 4,
  kInternalError = 5,
};

/// Runs one command line (without the program name). All regular output goes
/// to `out`; diagnostics, timings and error messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvz::cli
