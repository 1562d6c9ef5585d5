#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kink {

enum class ErrorCode {
  SizeMismatch,
  NotUnimodular,
  NotSymmetric,
  NotIntegral,
  NotPrimitive,
  ZeroVector,
  UnkinkShapeViolation,
  NoPositiveEigenvalue,
  NonpositiveCorner,
  SingularForDefiniteTarget,
  NotPositiveSemidefinite,
  NotPositiveDefinite,
  Not2x2,
  InvalidTrace,
  NotUnimodularForm,
  ParseError,
  BadRational,
  UnknownVariable,
  DegreeError,
  RegionOutOfRange,
  SelfPairedCrossing,
  BoundViolation,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::UnkinkShapeViolation: return "UnkinkShapeViolation";
    case ErrorCode::NoPositiveEigenvalue: return "NoPositiveEigenvalue";
    case ErrorCode::NonpositiveCorner: return "NonpositiveCorner";
    case ErrorCode::SingularForDefiniteTarget: return "SingularForDefiniteTarget";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::Not2x2: return "Not2x2";
    case ErrorCode::InvalidTrace: return "InvalidTrace";
    case ErrorCode::NotUnimodularForm: return "NotUnimodularForm";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::RegionOutOfRange: return "RegionOutOfRange";
    case ErrorCode::SelfPairedCrossing: return "SelfPairedCrossing";
    case ErrorCode::BoundViolation: return "BoundViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error tied to a line of some text input (1-based).
class ParseFailure : public Error {
 public:
  ParseFailure(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace kink
