#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace enlarge {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NegativeEpsilon,
  NotMonotone,
  NotMaximalMonotone,
  NotSelfCancelling,
  NotMaximalSelfCancelling,
  DualNotMonotone,
  NotConvex,
  DimensionTooLarge,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace enlarge

// Mathematical postconditions (certificates, witnesses). Compiled in unless the build turns
// ENLARGE_POSTCONDITIONS off (see the top-level CMake option).
#if defined(ENLARGE_POSTCONDITIONS)
#define ENLARGE_ENSURE(cond, msg)                                    \
  do {                                                               \
    if (!(cond)) ::enlarge::fail(::enlarge::ErrorCode::Internal, msg); \
  } while (false)
#else
#define ENLARGE_ENSURE(cond, msg) \
  do {                            \
  } while (false)
#endif
