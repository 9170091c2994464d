#pragma once

#include <stdexcept>
#include <string>

namespace xcreg {

// Coarse failure categories. The CLI maps them to process exit codes:
// ParseError -> 2, InvariantViolation -> 3, RegistrationFailure -> 4.
enum class ErrorCode {
  ParseError,
  InvariantViolation,
  RegistrationFailure,
  NumericError,
};

enum class ErrorKind {
  OutOfDomain,
  NonFinite,
  DegenerateWindow,
  ZeroArea,
  ShiftOutOfRange,
  NoMinimum,
  RangeDegenerate,
  GridMismatch,
  InsufficientData,
  EmptyInput,
  InvalidArgument,
  IoError,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), kind_(kind), code_(code) {}

  ErrorKind kind() const { return kind_; }
  ErrorCode code() const { return code_; }

 private:
  ErrorKind kind_;
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, ErrorCode code,
                                     const std::string& msg) {
  throw Error(kind, code, msg);
}

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DegenerateWindow: return "DegenerateWindow";
    case ErrorKind::ZeroArea: return "ZeroArea";
    case ErrorKind::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorKind::NoMinimum: return "NoMinimum";
    case ErrorKind::RangeDegenerate: return "RangeDegenerate";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace xcreg
