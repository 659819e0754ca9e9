#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace finterp {

enum class ErrorKind {
  Syntax,
  TypeMismatch,
  UnboundVariable,
  ArityMismatch,
  NotClosed,
  NotQuantifierFree,
  NotExistsFree,
  NotGamma1,
  NotForallExists,
  ShapeUnsupported,
  StepBudgetExceeded,
  InstanceCapExceeded,
};

// Buckets map onto the CLI exit codes: domain errors 1, language errors 2,
// budget exhaustion 3.
enum class ErrorCategory { Domain = 1, Language = 2, Budget = 3 };

inline ErrorCategory category_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax:
    case ErrorKind::TypeMismatch:
    case ErrorKind::UnboundVariable:
    case ErrorKind::ArityMismatch:
      return ErrorCategory::Language;
    case ErrorKind::StepBudgetExceeded:
    case ErrorKind::InstanceCapExceeded:
      return ErrorCategory::Budget;
    default:
      return ErrorCategory::Domain;
  }
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotQuantifierFree: return "NotQuantifierFree";
    case ErrorKind::NotExistsFree: return "NotExistsFree";
    case ErrorKind::NotGamma1: return "NotGamma1";
    case ErrorKind::NotForallExists: return "NotForallExists";
    case ErrorKind::ShapeUnsupported: return "ShapeUnsupported";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::InstanceCapExceeded: return "InstanceCapExceeded";
  }
  return "Error";
}

struct SourceLoc {
  int line = 0;
  int column = 0;
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  Error(ErrorKind kind, const std::string& message, SourceLoc loc)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message +
                           " (line " + std::to_string(loc.line) + ", column " +
                           std::to_string(loc.column) + ")"),
        kind_(kind),
        loc_(loc) {}

  ErrorKind kind() const { return kind_; }
  ErrorCategory category() const { return category_of(kind_); }
  const std::optional<SourceLoc>& location() const { return loc_; }

private:
  ErrorKind kind_;
  std::optional<SourceLoc> loc_;
};

}  // namespace finterp
