#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qegs {

enum class ErrorKind {
  Parse,
  Shape,
  Param,
  NotTwoByTwo,
  ParametricInput,
  ParametricBase,
  ParamOutOfRange,
  IndexOutOfRange,
  NoParameter,
  DegreeTooHigh,
  EmptyDomain,
  NoReport,
  Io,
  MixedRadicands,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::Param: return "ParamError";
    case ErrorKind::NotTwoByTwo: return "NotTwoByTwo";
    case ErrorKind::ParametricInput: return "ParametricInput";
    case ErrorKind::ParametricBase: return "ParametricBase";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NoParameter: return "NoParameter";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::NoReport: return "NoReport";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::MixedRadicands: return "MixedRadicands";
  }
  return "Unknown";
}

/// Every failure raised by the engine carries one of the kinds above so that
/// front ends (CLI exit codes, HTTP error codes) can classify it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Canonical messages for the two user-facing input checks.
inline constexpr std::string_view kMsgNotNumeric = "input matrix must be numerical";
inline constexpr std::string_view kMsgNotTwoByTwo = "input matrix must be 2x2";

}  // namespace qegs
