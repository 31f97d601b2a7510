#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sring {

enum class ErrorKind {
  InvalidModulus,
  SizeCap,
  MalformedLiteral,
  MalformedExpression,
  ZeroInClosure,
  CapExceeded,
  EmptySpectrum,
  DegreeOverflow,
  BudgetExhausted,
  RingMismatch,
  NonCommutative,
  Parse,
  Usage,
};

std::string_view to_string(ErrorKind kind);

class SringError : public std::runtime_error {
 public:
  SringError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sring
