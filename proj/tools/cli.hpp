#pragma once

#include <iosfwd>
#include <string_view>

#include "cbperm/permutation.hpp"

namespace cbperm::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// "t1", "t2", "t1t2" or "custom:<patterns>", patterns separated by ',' or
/// ';' and written either as digit strings ("3214") or space-separated.
PatternBasis parse_basis(std::string_view text);

/// Runs one invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cbperm::cli
