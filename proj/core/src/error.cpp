#include "frobw2/error.hpp"

namespace frobw2 {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CharMismatch: return "CharMismatch";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::UnitError: return "UnitError";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DescriptorError: return "DescriptorError";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace frobw2
