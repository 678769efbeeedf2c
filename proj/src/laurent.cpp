#include "splice_alex/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "splice_alex/error.hpp"

namespace splice_alex {

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(const Rational& coefficient, std::int64_t exponent) {
  LaurentPoly p(coefficient);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::t_power_minus_one(std::int64_t a) {
  if (a == 0) return {};
  LaurentPoly p;
  if (a > 0) {
    p.coeffs_.assign(static_cast<std::size_t>(a) + 1, Rational(0));
    p.coeffs_.front() = -1;
    p.coeffs_.back() = 1;
  } else {
    p.low_ = a;
    p.coeffs_.assign(static_cast<std::size_t>(-a) + 1, Rational(0));
    p.coeffs_.front() = 1;
    p.coeffs_.back() = -1;
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::int64_t low_exponent, std::vector<Rational> coefficients) {
  LaurentPoly p;
  p.low_ = low_exponent;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<std::int64_t, Rational>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

std::int64_t LaurentPoly::low_exponent() const {
  if (is_zero()) throw Error(ErrorCode::BothZero, "zero polynomial has no exponents");
  return low_;
}

std::int64_t LaurentPoly::high_exponent() const {
  return low_exponent() + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::int64_t LaurentPoly::span() const { return high_exponent() - low_exponent(); }

Rational LaurentPoly::coefficient(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (is_zero()) throw Error(ErrorCode::BothZero, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

const Rational& LaurentPoly::trailing_coefficient() const {
  if (is_zero()) throw Error(ErrorCode::BothZero, "zero polynomial has no trailing coefficient");
  return coeffs_.front();
}

std::vector<std::pair<std::int64_t, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

void LaurentPoly::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const std::int64_t lo = std::min(low_, other.low_);
  const std::int64_t hi = std::max(high_exponent(), other.high_exponent());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  const auto offset = static_cast<std::size_t>(other.low_ - lo);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[offset + i] += other.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) return *this = LaurentPoly();
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

DivMod euclidean_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};

  // Work on the ordinary polynomials a', b' with nonzero constant terms.
  const auto& bc = b.dense_coefficients();
  std::vector<Rational> rem = a.dense_coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() > db ? rem.size() - db : 0, Rational(0));
  const Rational inv_lead = 1 / Rational(bc.back());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = rem[k + db] * inv_lead;
    if (c == 0) continue;
    quot[k] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * bc[j];
  }
  DivMod out;
  out.quotient = LaurentPoly::from_coefficients(a.low_exponent() - b.low_exponent(), std::move(quot));
  out.remainder = LaurentPoly::from_coefficients(a.low_exponent(), std::move(rem));
  return out;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return euclidean_divide(a, b).remainder.is_zero();
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = euclidean_divide(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorCode::NotAPolynomial, to_string(b) + " does not divide " + to_string(a));
  }
  return q;
}

LaurentPoly canonical(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& c : p.dense_coefficients()) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  return p.shifted(-p.low_exponent()) * scale;
}

bool associates(const LaurentPoly& a, const LaurentPoly& b) { return canonical(a) == canonical(b); }

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  LaurentPoly x = a;
  LaurentPoly y = b;
  while (!y.is_zero()) {
    LaurentPoly r = euclidean_divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical(x);
}

LaurentPoly pow(const LaurentPoly& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (!base.is_unit()) throw Error(ErrorCode::NotAPolynomial, "negative power of a non-unit");
    return pow(LaurentPoly::monomial(1 / base.leading_coefficient(), -base.low_exponent()), -exponent);
  }
  LaurentPoly result(1);
  LaurentPoly square = base;
  for (std::int64_t e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= square;
    if (e > 1) square *= square;
  }
  return result;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  auto terms = p.terms();
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace splice_alex
