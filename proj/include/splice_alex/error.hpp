#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splice_alex {

enum class ErrorCode {
  NotAPolynomial,
  BothZero,
  DivisionByZero,
  SyntaxError,
  DuplicateVertexId,
  UnknownVertexReference,
  InvalidDiagram,
  SameVertex,
  IsArrowhead,
  ZeroMultiplicity,
  NotAnInternalEdge,
  EmptyGcdSet,
  ZeroGcd,
  NotFibered,
  NoUniformTwists,
  BlockCountNegative,
  NotRootOfUnityTorsion,
  InvalidGcdChain,
  NotCoprime,
  NonIntegralGenus,
  Overflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Overflow-checked integer helpers. Linking numbers are products of edge
// weights and grow quickly on deep trees.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_abs(std::int64_t a);

}  // namespace splice_alex
