#pragma once

#include <stdexcept>
#include <string>

namespace ginlex {

enum class ErrorKind {
  RingMismatch,
  EmptyPolynomial,
  Parse,
  NotHomogeneous,
  UnknownVariable,
  ExponentOverflow,
  SingularMatrix,
  ResourceCap,
  NotBorelFixed,
  GinInstability,
  RecipeMismatch,
  NotACurve,
  PointNotOnScheme,
  CenterOnVariety,
  LandedOnCurve,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "ring mismatch";
    case ErrorKind::EmptyPolynomial: return "empty polynomial";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::NotHomogeneous: return "not homogeneous";
    case ErrorKind::UnknownVariable: return "unknown variable";
    case ErrorKind::ExponentOverflow: return "exponent overflow";
    case ErrorKind::SingularMatrix: return "singular matrix";
    case ErrorKind::ResourceCap: return "resource cap exceeded";
    case ErrorKind::NotBorelFixed: return "not Borel-fixed";
    case ErrorKind::GinInstability: return "gin instability";
    case ErrorKind::RecipeMismatch: return "partial elimination recipes disagree";
    case ErrorKind::NotACurve: return "not a curve";
    case ErrorKind::PointNotOnScheme: return "point not on scheme";
    case ErrorKind::CenterOnVariety: return "projection center on variety";
    case ErrorKind::LandedOnCurve: return "secant point lies on curve";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace ginlex
