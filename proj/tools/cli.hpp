#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radokit::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { ok = 0, negative = 1, input_error = 2, budget_exhausted = 3 };

/// Runs one command line (without the program name). The JSON report goes to
/// `out` unless redirected with --report; summaries and errors go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a digest rendered as 16 hex digits.
std::string content_digest(const std::string& bytes);

}  // namespace radokit::cli
