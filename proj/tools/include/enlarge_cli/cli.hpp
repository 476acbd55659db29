#pragma once

#include <iosfwd>

namespace enlarge::cli {

/// Environment variable selecting the default arithmetic ("exact" or "float").
inline constexpr const char* kArithEnv = "ENLARGE_ARITH";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace enlarge::cli
