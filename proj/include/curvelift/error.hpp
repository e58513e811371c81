#pragma once

#include <stdexcept>
#include <string>

namespace curvelift {

// Numeric values are part of the C ABI (see curvelift.h); do not reorder.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDomain = 2,
  kUnsupportedOrder = 3,
  kInvalidDimension = 4,
  kCapExceeded = 5,
  kParse = 6,
  kSubsetViolation = 7,
  kUndefined = 8,
  kInvalidForm = 9,
  kIo = 10,
};

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

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace curvelift
