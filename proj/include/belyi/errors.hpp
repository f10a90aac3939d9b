#ifndef BELYI_ERRORS_HPP
#define BELYI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace belyi {

enum class ErrorKind {
  InvalidField,
  FieldMismatch,
  DivisionByZero,
  InvalidInput,
  DegenerateComposition,
  SingularCurve,
  NotBelyi,
  WrongGenus,
  CurveMismatch,
  DegenerateCover,
  NotSupported,
  PrecisionError,
  InvalidParams,
  SampleRejected,
  SchemaError,
  MissingDependency,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateComposition: return "DegenerateComposition";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::NotBelyi: return "NotBelyi";
    case ErrorKind::WrongGenus: return "WrongGenus";
    case ErrorKind::CurveMismatch: return "CurveMismatch";
    case ErrorKind::DegenerateCover: return "DegenerateCover";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::PrecisionError: return "PrecisionError";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SampleRejected: return "SampleRejected";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::MissingDependency: return "MissingDependency";
  }
  return "Error";
}

}  // namespace belyi

#endif
