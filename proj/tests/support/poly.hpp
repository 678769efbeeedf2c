#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

#include "splice_alex/laurent.hpp"

namespace splice_alex::testing {

/// {{exponent, coefficient}, ...}
inline LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
  std::map<std::int64_t, Rational> m;
  for (const auto& [e, c] : terms) m[e] += c;
  return LaurentPoly::from_terms(m);
}

}  // namespace splice_alex::testing
