#pragma once

#include <stdexcept>
#include <string>

namespace gsvio {

enum class ErrorCode {
  InvalidArgument,
  Ordering,
  Gap,
  Coverage,
  MissingAsset,
  MissingColor,
  InsufficientPoints,
  InsufficientOverlap,
  EmptyTarget,
  EmptyFrame,
  DegenerateGeometry,
  InvalidSpec,
  Io,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gsvio
