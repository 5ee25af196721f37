#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzztop::cli {

enum ExitCode : int { ok = 0, malformed_input = 1, precondition = 2, inconsistency = 3 };

/// Runs one command line (args excludes the program name). Reads the
/// instance from the named file or from `in`, writes the document to `out`
/// in a single write and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fuzztop::cli
