#pragma once

#include <stdexcept>
#include <string>

namespace mex {

enum class ErrorCode {
  InvalidInput,
  InfeasibleExchange,
  IncompatiblePairs,
  DomainError,
  NotAColoring,
  NotABasis,
  OrientationMismatch,
  PreconditionViolation,
  InternalBoundViolation,
  NotBipartite,
  CompletionNotFound,
  TooLarge,
  NotFound,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mex
