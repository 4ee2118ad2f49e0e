#pragma once

// Error taxonomy shared by every module. Each failure mode carries a stable
// machine-readable code; the CLI maps codes onto its exit-code contract.

#include <stdexcept>
#include <string>

namespace lrmso {

enum class ErrorCode {
  MalformedDocument,
  VertexOutOfRange,
  SelfLoop,
  UnknownFamily,
  BadParameter,
  TooLarge,
  CapExceeded,
  NotASeparation,
  NotASuffix,
  AsymmetricSpecUsedAsSymmetric,
  SyntaxError,
  UnknownFlipSpec,
  ArityMismatch,
  UnboundVariable,
  SymmetryRequired,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotASeparation: return "NotASeparation";
    case ErrorCode::NotASuffix: return "NotASuffix";
    case ErrorCode::AsymmetricSpecUsedAsSymmetric:
      return "AsymmetricSpecUsedAsSymmetric";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownFlipSpec: return "UnknownFlipSpec";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::SymmetryRequired: return "SymmetryRequired";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax failures additionally carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", col " + std::to_string(col) +
                  ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace lrmso
