#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "splice_alex/laurent.hpp"

namespace splice_alex {

/// Multiplicity of Phi_k for each k with nonzero multiplicity.
using CyclotomicMultiplicities = std::map<std::int64_t, std::int64_t>;

std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// The k-th cyclotomic polynomial, computed as (t^k - 1) divided by every
/// Phi_d with d | k, d < k. Results are cached process-wide.
LaurentPoly cyclotomic(std::int64_t k);

/// Exact root of unity exp(2 pi i k/n), 0 <= k < n, gcd(k, n) = 1.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  /// Reduces k/n; k is taken modulo n.
  RootOfUnity(std::int64_t k, std::int64_t n);

  std::int64_t numerator() const noexcept { return k_; }
  /// Order of the root, i.e. the n with z a primitive n-th root of unity.
  std::int64_t order() const noexcept { return n_; }

  /// All primitive n-th roots in increasing k.
  static std::vector<RootOfUnity> primitive_roots(std::int64_t n);

  friend auto operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.k_ <=> b.k_;
  }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t k_ = 0;
  std::int64_t n_ = 1;
};

/// "k/n", e.g. "1/6"; the root 1 is "0/1".
std::string to_string(const RootOfUnity& z);

/// sign * t^shift * prod_a (t^a - 1)^{e_a}, a >= 1, e_a != 0.
class CycloProduct {
 public:
  CycloProduct() = default;

  /// (t^a - 1)^exponent.
  static CycloProduct binomial(std::int64_t a, std::int64_t exponent = 1);
  static CycloProduct unit(int sign, std::int64_t shift);
  /// Inverts cyclo_normalize via Phi_n = prod_{d|n} (t^d - 1)^{mu(n/d)}.
  static CycloProduct from_multiplicities(const CyclotomicMultiplicities& mult);

  int sign() const noexcept { return sign_; }
  std::int64_t shift() const noexcept { return shift_; }
  const std::map<std::int64_t, std::int64_t>& factors() const noexcept { return factors_; }

  /// Degree of the underlying rational function: sum of a * e_a.
  std::int64_t degree() const;
  /// Every cyclotomic multiplicity is nonnegative.
  bool is_polynomial() const;
  bool is_one() const noexcept { return factors_.empty() && sign_ == 1 && shift_ == 0; }

  CycloProduct inverse() const;
  /// Same value, factors rewritten in the Moebius basis so that equal
  /// products have equal factor maps.
  CycloProduct canonical_form() const;

  CycloProduct& operator*=(const CycloProduct& other);
  friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
  friend CycloProduct operator/(CycloProduct a, const CycloProduct& b) { return a *= b.inverse(); }

  /// Equal multiplicity functions and equal units.
  friend bool operator==(const CycloProduct& a, const CycloProduct& b);

 private:
  int sign_ = 1;
  std::int64_t shift_ = 0;
  std::map<std::int64_t, std::int64_t> factors_;
};

CycloProduct cyclo_mul(const CycloProduct& a, const CycloProduct& b);
CyclotomicMultiplicities cyclo_normalize(const CycloProduct& p);
/// Dense expansion. Throws NotAPolynomial if some multiplicity is negative.
LaurentPoly cyclo_expand(const CycloProduct& p);
/// Multiplicity of z as a root of p (negative for formal quotients).
std::int64_t eigenvalue_multiplicity(const CycloProduct& p, const RootOfUnity& z);
/// Equality up to units.
bool associates(const CycloProduct& a, const CycloProduct& b);

/// Renders as e.g. "(t-1)*(t^6-1)*(t^3-1)^-1"; the empty product is "1".
std::string to_string(const CycloProduct& p);
inline std::ostream& operator<<(std::ostream& os, const CycloProduct& p) { return os << to_string(p); }

struct CyclotomicFactorization {
  CyclotomicMultiplicities multiplicities;
  /// Cofactor with no root of unity among its roots.
  LaurentPoly rest;
};

/// Splits off every cyclotomic factor of a nonzero Laurent polynomial by
/// trial division.
CyclotomicFactorization cyclotomic_factorization(const LaurentPoly& p);

}  // namespace splice_alex
