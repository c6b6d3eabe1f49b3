#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobw2 {

enum class ErrorKind {
  CharMismatch,
  UnsupportedField,
  NotDivisible,
  RingMismatch,
  ShapeError,
  UnsupportedShape,
  RangeError,
  DegreeTooHigh,
  UnitError,
  NotRegular,
  InvariantViolation,
  DescriptorError,
  SingularCurve,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it onto a stable diagnosis.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace frobw2
