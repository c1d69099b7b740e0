#pragma once

#include <stdexcept>
#include <string>

namespace spschub {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Unsupported,
  Internal,
};

/// Exception type thrown by every module. The code survives the trip across
/// the C boundary as a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

inline void check_internal(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::Internal, "internal error: " + what);
}

}  // namespace spschub
