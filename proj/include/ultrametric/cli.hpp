#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultrametric::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kPreconditionError = 2,
  kSelftestFailure = 3,
};

/// Runs one subcommand. `argv` includes the program name. Input JSON is read
/// from --input FILE or, for commands that take input, from `in`. A RunReport
/// JSON document is written to `out`; help text goes to `out` as well.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out);

}  // namespace ultrametric::cli
