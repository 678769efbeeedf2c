#include "splice_alex/error.hpp"

#include <limits>

namespace splice_alex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPolynomial: return "NotAPolynomial";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::UnknownVertexReference: return "UnknownVertexReference";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::IsArrowhead: return "IsArrowhead";
    case ErrorCode::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorCode::NotAnInternalEdge: return "NotAnInternalEdge";
    case ErrorCode::EmptyGcdSet: return "EmptyGcdSet";
    case ErrorCode::ZeroGcd: return "ZeroGcd";
    case ErrorCode::NotFibered: return "NotFibered";
    case ErrorCode::NoUniformTwists: return "NoUniformTwists";
    case ErrorCode::BlockCountNegative: return "BlockCountNegative";
    case ErrorCode::NotRootOfUnityTorsion: return "NotRootOfUnityTorsion";
    case ErrorCode::InvalidGcdChain: return "InvalidGcdChain";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer product exceeds 64 bits");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer sum exceeds 64 bits");
  }
  return out;
}

std::int64_t checked_abs(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "absolute value exceeds 64 bits");
  }
  return a < 0 ? -a : a;
}

}  // namespace splice_alex
