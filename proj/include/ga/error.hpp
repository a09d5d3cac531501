#pragma once

#include <stdexcept>
#include <string>

namespace ga {

enum class ErrorCode {
  DivisionByZero,
  BadIndex,
  EvaluationPole,
  SignatureMismatch,
  BadGrade,
  NotInvertible,
  NotUnitNorm,
  NotUnit,
  NotVersor,
  NotInvolutive,
  NotParallel,
  NotHomogeneous,
  NotEven,
  NotAdapted,
  BadSigma,
  ParseError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::EvaluationPole: return "EvaluationPole";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::BadGrade: return "BadGrade";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotVersor: return "NotVersor";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::BadSigma: return "BadSigma";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ga
