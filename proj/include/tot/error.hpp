#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tot {

enum class ErrorKind {
  SumNotPi,
  OutOfRange,
  NotDegenerate,
  UnsupportedLocus,
  ZeroVelocity,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by the library. The CLI maps these to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tot
