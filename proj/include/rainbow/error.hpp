#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  IndexOutOfRange,
  ParameterTooSmall,
  IdentityInConnectionSet,
  NotInverseClosed,
  SizeMismatch,
  ColorOutOfRange,
  BadOrder,
  KOutOfRange,
  InvalidInput,
  UnsupportedK,
  TranscriptionMismatch,
  NotCubic,
  NotConnected,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module in the library. The code is stable and
/// is what callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rainbow
