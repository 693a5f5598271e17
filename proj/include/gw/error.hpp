#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gw {

enum class ErrorKind {
  DivisionByZero,
  SingularMatrix,
  RankMismatch,
  InstanceMismatch,
  ZeroElement,
  NonMonicDivisor,
  DivisionStalled,
  Precondition,
  Syntax,
  UndeclaredGenerator,
  NotInvertible,
  IdentityNotVerified,
  CertificateFailure,
  AnalysisFailure,
  Mismatch,
  Overflow,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `position` is set for parse errors
/// and holds a 0-based character offset into the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace gw
