#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flp {

enum class ErrorKind {
  SingularPoint,
  UnknownTarget,
  NonzeroConstantTerm,
  CenterOutsideRange,
  DomainError,
  ArgUndefined,
  ParamRange,
  UnknownId,
  NoSignChange,
  MaxIterExceeded,
  QuadratureFailure,
  NoConvergence,
  SingularOnCircle,
  DerivativeVanishes,
  SingularSample,
  FileWrite,
  ParseError,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library surfaces as this exception; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flp
