#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace splice_alex {

using Rational = mpq_class;

/// Laurent polynomial in t with rational coefficients, stored densely from
/// the lowest nonzero exponent upward. Zero is the empty polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  // Implicit so that Eigen can build zero/one scalars.
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly monomial(const Rational& coefficient, std::int64_t exponent);
  /// t^a - 1. For a = 0 this is the zero polynomial.
  static LaurentPoly t_power_minus_one(std::int64_t a);
  static LaurentPoly from_coefficients(std::int64_t low_exponent, std::vector<Rational> coefficients);
  static LaurentPoly from_terms(const std::map<std::int64_t, Rational>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Single nonzero term, i.e. a unit of the Laurent ring.
  bool is_unit() const noexcept { return coeffs_.size() == 1; }

  std::int64_t low_exponent() const;
  std::int64_t high_exponent() const;
  /// Euclidean size: high minus low exponent. Invariant under units.
  std::int64_t span() const;

  Rational coefficient(std::int64_t exponent) const;
  const Rational& leading_coefficient() const;
  const Rational& trailing_coefficient() const;
  const std::vector<Rational>& dense_coefficients() const noexcept { return coeffs_; }

  /// Nonzero terms sorted by exponent.
  std::vector<std::pair<std::int64_t, Rational>> terms() const;

  /// Multiply by t^k.
  LaurentPoly shifted(std::int64_t k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<Rational> coeffs_;
};

struct DivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Euclidean division in Q[t^{+-1}]: a = q*b + r with r = 0 or span(r) < span(b).
DivMod euclidean_divide(const LaurentPoly& a, const LaurentPoly& b);

/// True iff b divides a in Q[t^{+-1}].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// a / b, throwing NotAPolynomial if the division is not exact.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// Representative of the associate class of p: an ordinary polynomial with
/// nonzero constant term, coprime integer coefficients and a positive
/// leading coefficient. Zero maps to zero.
LaurentPoly canonical(const LaurentPoly& p);

bool associates(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical gcd. Throws BothZero when a = b = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly pow(const LaurentPoly& base, std::int64_t exponent);

/// Renders as e.g. "t^3+1", "-t^-1+2/3*t", "0".
std::string to_string(const LaurentPoly& p);
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace splice_alex
