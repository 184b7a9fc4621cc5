#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superpoly {

enum class ErrorKind {
  ZeroDenominator,
  SingularSubstitution,
  NotPolynomial,
  BoxOutsideDiagram,
  NotContained,
  DegreeBound,
  NonInvertible,
  TooLarge,
  NotCoprime,
  ShapeMismatch,
  NotSymmetric,
  Parse,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::SingularSubstitution: return "SingularSubstitution";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::BoxOutsideDiagram: return "BoxOutsideDiagram";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::DegreeBound: return "DegreeBound";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// command-line front end can map it onto an exit code or an error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace superpoly
