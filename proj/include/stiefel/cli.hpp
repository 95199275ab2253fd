#pragma once

#include <ostream>

namespace stiefel::cli {

/// Exit codes: 0 certified, 1 verification failed, 2 bad input,
/// 3 infeasible or unsupported, 4 numerical failure.
enum Exit : int { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kUnsupported = 3, kNumerical = 4 };

/// Runs the command line. Code files and reports go to `out`; summaries and
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stiefel::cli
