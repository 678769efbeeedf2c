#include "splice_alex/cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "splice_alex/error.hpp"

namespace splice_alex {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(std::int64_t n) {
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

namespace {

std::mutex cyclotomic_mutex;
std::unordered_map<std::int64_t, LaurentPoly> cyclotomic_cache;

// Exact division of a polynomial (coefficients from t^0) by t^a - 1.
std::vector<Rational> divide_by_binomial(const std::vector<Rational>& p, std::int64_t a) {
  const auto step = static_cast<std::size_t>(a);
  if (p.size() <= step) throw Error(ErrorCode::NotAPolynomial, "binomial does not divide");
  std::vector<Rational> q(p.size() - step, Rational(0));
  // p_j = q_{j-a} - q_j, solved from the top down.
  for (std::size_t j = q.size(); j-- > 0;) {
    q[j] = p[j + step];
    if (j + step < q.size()) q[j] += q[j + step];
  }
  for (std::size_t j = 0; j < step; ++j) {
    const Rational qj = j < q.size() ? q[j] : Rational(0);
    if (p[j] != -qj) throw Error(ErrorCode::NotAPolynomial, "binomial does not divide");
  }
  return q;
}

std::vector<Rational> multiply_by_binomial(const std::vector<Rational>& p, std::int64_t a) {
  const auto step = static_cast<std::size_t>(a);
  std::vector<Rational> out(p.size() + step, Rational(0));
  for (std::size_t j = 0; j < p.size(); ++j) {
    out[j] -= p[j];
    out[j + step] += p[j];
  }
  return out;
}

}  // namespace

LaurentPoly cyclotomic(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidGcdChain, "cyclotomic index must be positive");
  {
    std::lock_guard lock(cyclotomic_mutex);
    if (auto it = cyclotomic_cache.find(k); it != cyclotomic_cache.end()) return it->second;
  }
  LaurentPoly phi = LaurentPoly::t_power_minus_one(k);
  for (std::int64_t d : divisors(k)) {
    if (d == k) break;
    phi = exact_quotient(phi, cyclotomic(d));
  }
  std::lock_guard lock(cyclotomic_mutex);
  return cyclotomic_cache.emplace(k, std::move(phi)).first->second;
}

// -- RootOfUnity ------------------------------------------------------------

RootOfUnity::RootOfUnity(std::int64_t k, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidGcdChain, "root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  const std::int64_t g = gcd(k, n);
  k_ = k / g;
  n_ = n / g;
}

std::vector<RootOfUnity> RootOfUnity::primitive_roots(std::int64_t n) {
  std::vector<RootOfUnity> out;
  for (std::int64_t k = 0; k < n; ++k) {
    if (gcd(k, n) == 1) out.emplace_back(k, n);
  }
  return out;
}

std::string to_string(const RootOfUnity& z) {
  return std::to_string(z.numerator()) + "/" + std::to_string(z.order());
}

// -- CycloProduct -----------------------------------------------------------

CycloProduct CycloProduct::binomial(std::int64_t a, std::int64_t exponent) {
  if (a < 1) throw Error(ErrorCode::NotAPolynomial, "t^a - 1 needs a >= 1, got a = " + std::to_string(a));
  CycloProduct p;
  if (exponent != 0) p.factors_[a] = exponent;
  return p;
}

CycloProduct CycloProduct::unit(int sign, std::int64_t shift) {
  CycloProduct p;
  p.sign_ = sign < 0 ? -1 : 1;
  p.shift_ = shift;
  return p;
}

CycloProduct CycloProduct::from_multiplicities(const CyclotomicMultiplicities& mult) {
  CycloProduct p;
  for (const auto& [n, m] : mult) {
    for (std::int64_t d : divisors(n)) {
      const int mu = mobius(n / d);
      if (mu == 0) continue;
      std::int64_t& e = p.factors_[d];
      e = checked_add(e, checked_mul(m, mu));
      if (e == 0) p.factors_.erase(d);
    }
  }
  return p;
}

std::int64_t CycloProduct::degree() const {
  std::int64_t deg = 0;
  for (const auto& [a, e] : factors_) deg = checked_add(deg, checked_mul(a, e));
  return deg;
}

bool CycloProduct::is_polynomial() const {
  for (const auto& [k, m] : cyclo_normalize(*this)) {
    if (m < 0) return false;
  }
  return true;
}

CycloProduct CycloProduct::inverse() const {
  CycloProduct p;
  p.sign_ = sign_;
  p.shift_ = -shift_;
  for (const auto& [a, e] : factors_) p.factors_[a] = -e;
  return p;
}

CycloProduct CycloProduct::canonical_form() const {
  CycloProduct p = from_multiplicities(cyclo_normalize(*this));
  p.sign_ = sign_;
  p.shift_ = shift_;
  return p;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& other) {
  sign_ *= other.sign_;
  shift_ = checked_add(shift_, other.shift_);
  for (const auto& [a, e] : other.factors_) {
    std::int64_t& mine = factors_[a];
    mine = checked_add(mine, e);
    if (mine == 0) factors_.erase(a);
  }
  return *this;
}

bool operator==(const CycloProduct& a, const CycloProduct& b) {
  return a.sign_ == b.sign_ && a.shift_ == b.shift_ && cyclo_normalize(a) == cyclo_normalize(b);
}

CycloProduct cyclo_mul(const CycloProduct& a, const CycloProduct& b) { return a * b; }

CyclotomicMultiplicities cyclo_normalize(const CycloProduct& p) {
  CyclotomicMultiplicities mult;
  for (const auto& [a, e] : p.factors()) {
    for (std::int64_t k : divisors(a)) mult[k] = checked_add(mult[k], e);
  }
  std::erase_if(mult, [](const auto& kv) { return kv.second == 0; });
  return mult;
}

LaurentPoly cyclo_expand(const CycloProduct& p) {
  if (!p.is_polynomial()) {
    throw Error(ErrorCode::NotAPolynomial, to_string(p) + " has a negative cyclotomic multiplicity");
  }
  // Reduce to lowest terms first so intermediate products stay small.
  const CycloProduct reduced = p.canonical_form();
  std::vector<Rational> coeffs{Rational(1)};
  for (const auto& [a, e] : reduced.factors()) {
    for (std::int64_t i = 0; i < e; ++i) coeffs = multiply_by_binomial(coeffs, a);
  }
  for (const auto& [a, e] : reduced.factors()) {
    for (std::int64_t i = 0; i < -e; ++i) coeffs = divide_by_binomial(coeffs, a);
  }
  LaurentPoly out = LaurentPoly::from_coefficients(p.shift(), std::move(coeffs));
  return p.sign() < 0 ? -out : out;
}

std::int64_t eigenvalue_multiplicity(const CycloProduct& p, const RootOfUnity& z) {
  const auto mult = cyclo_normalize(p);
  auto it = mult.find(z.order());
  return it == mult.end() ? 0 : it->second;
}

bool associates(const CycloProduct& a, const CycloProduct& b) {
  return cyclo_normalize(a) == cyclo_normalize(b);
}

std::string to_string(const CycloProduct& p) {
  std::ostringstream os;
  if (p.sign() < 0) os << '-';
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (p.shift() != 0) {
    sep();
    os << 't';
    if (p.shift() != 1) os << '^' << p.shift();
  }
  auto emit = [&](std::int64_t a, std::int64_t e) {
    sep();
    os << "(t";
    if (a != 1) os << '^' << a;
    os << "-1)";
    if (e != 1) os << '^' << e;
  };
  for (const auto& [a, e] : p.factors()) {
    if (e > 0) emit(a, e);
  }
  for (const auto& [a, e] : p.factors()) {
    if (e < 0) emit(a, e);
  }
  if (first) os << '1';
  return os.str();
}

CyclotomicFactorization cyclotomic_factorization(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::NotRootOfUnityTorsion, "zero has every root");
  CyclotomicFactorization out;
  out.rest = canonical(p);
  // phi(n) >= sqrt(n/2), so only n <= 2 deg^2 can contribute.
  for (std::int64_t n = 1; out.rest.span() > 0 && n <= 2 * out.rest.span() * out.rest.span(); ++n) {
    if (euler_phi(n) > out.rest.span()) continue;
    const LaurentPoly phi = cyclotomic(n);
    for (;;) {
      auto [q, r] = euclidean_divide(out.rest, phi);
      if (!r.is_zero()) break;
      out.rest = canonical(q);
      ++out.multiplicities[n];
    }
  }
  return out;
}

}  // namespace splice_alex
