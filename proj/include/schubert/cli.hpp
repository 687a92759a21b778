#pragma once

#include <iosfwd>

namespace schubert::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  // e.g. levi set not inside the left descents
  kUsageError = 2,
  kBudgetExhausted = 3,
};

/// Runs one command line. Results go to `out` (JSON, JSONL or --pretty
/// text); diagnostics go to `err` only.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
