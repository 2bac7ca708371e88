#pragma once

#include <stdexcept>
#include <string>

namespace tct {

// Error categories, aligned with the exit codes of the CLI and the codes of
// the C API (see tct/tct.h).
enum class ErrorCode : int {
  Internal = 1,
  Config = 2,
  SingularState = 3,
  NotCompletelyPositive = 4,
  DimensionMismatch = 5,
  InvalidArgument = 6,
  Io = 7,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace tct
