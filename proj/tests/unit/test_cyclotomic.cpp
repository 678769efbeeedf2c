#include <doctest.h>

#include "splice_alex/cyclotomic.hpp"
#include "splice_alex/error.hpp"
#include "support/poly.hpp"

using namespace splice_alex;
using splice_alex::testing::poly;

namespace {

CycloProduct b(std::int64_t a, std::int64_t e = 1) { return CycloProduct::binomial(a, e); }

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("number theory helpers") {
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(euler_phi(12) == 4);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(gcd(-12, 18) == 6);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly({{1, 1}, {0, -1}}));
    CHECK(cyclotomic(6) == poly({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(cyclotomic(12) == poly({{4, 1}, {2, -1}, {0, 1}}));
    LaurentPoly prod(1);
    for (std::int64_t k : divisors(30)) prod = prod * cyclotomic(k);
    CHECK(prod == LaurentPoly::t_power_minus_one(30));
  }

  TEST_CASE("multiplication merges exponents") {
    CHECK((b(6) * b(6, -1)).is_one());
    CHECK((b(1) * b(2)).factors() == std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 1}});
    CHECK((b(3, 2) * b(3)).factors() == std::map<std::int64_t, std::int64_t>{{3, 3}});
    CHECK(cyclo_mul(b(4), b(4, -1)) == CycloProduct());
  }

  TEST_CASE("normalization into cyclotomic multiplicities") {
    CHECK(cyclo_normalize(b(6)) == CyclotomicMultiplicities{{1, 1}, {2, 1}, {3, 1}, {6, 1}});
    CHECK(cyclo_normalize(b(6) / b(3)) == CyclotomicMultiplicities{{2, 1}, {6, 1}});
    CHECK(cyclo_normalize(CycloProduct()).empty());
    CHECK_THROWS_AS(b(0), Error);
  }

  TEST_CASE("expansion") {
    CHECK(cyclo_expand(b(6) / b(3)) == poly({{3, 1}, {0, 1}}));
    CHECK(cyclo_expand(b(1, 0)) == LaurentPoly(1));
    CHECK(cyclo_expand(b(1) * b(2) / b(2)) == LaurentPoly::t_power_minus_one(1));
    CHECK(cyclo_expand(b(1) * b(6) / (b(2) * b(3))) == poly({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(cyclo_expand(CycloProduct::unit(-1, 2) * b(1)) == poly({{3, -1}, {2, 1}}));
    try {
      (void)cyclo_expand(b(2) / b(3));
      FAIL("expected NotAPolynomial");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAPolynomial);
    }
  }

  TEST_CASE("eigenvalue multiplicity") {
    const CycloProduct p = b(6) / b(3);
    CHECK(eigenvalue_multiplicity(p, RootOfUnity(1, 6)) == 1);
    CHECK(eigenvalue_multiplicity(p, RootOfUnity(5, 6)) == 1);
    CHECK(eigenvalue_multiplicity(p, RootOfUnity(0, 1)) == 0);
    CHECK(eigenvalue_multiplicity(b(1, 2), RootOfUnity(1, 2)) == 0);
    CHECK(eigenvalue_multiplicity(b(1, 2), RootOfUnity(3, 3)) == 2);
  }

  TEST_CASE("roots of unity are reduced fractions") {
    CHECK(to_string(RootOfUnity(2, 4)) == "1/2");
    CHECK(to_string(RootOfUnity(6, 6)) == "0/1");
    CHECK(to_string(RootOfUnity(-1, 6)) == "5/6");
    CHECK(RootOfUnity::primitive_roots(12).size() == 4);
  }

  TEST_CASE("rendering") {
    CHECK(to_string(b(1) * b(6) / b(3)) == "(t-1)*(t^6-1)*(t^3-1)^-1");
    CHECK(to_string(CycloProduct()) == "1");
    CHECK(to_string(b(1, 2)) == "(t-1)^2");
  }

  TEST_CASE("canonical form and associates") {
    const CycloProduct p = b(1) * b(6) / (b(2) * b(3));
    CHECK(cyclo_normalize(p.canonical_form()) == cyclo_normalize(p));
    CHECK(associates(p, p.canonical_form()));
    CHECK(associates(p, p * CycloProduct::unit(-1, 5)));
    CHECK(p.canonical_form() == p);
    CHECK(CycloProduct::from_multiplicities({{6, 1}}) == p);
  }

  TEST_CASE("cyclotomic factorization of a polynomial") {
    const LaurentPoly p = cyclo_expand(b(4) * b(6) / b(2)) * poly({{2, 1}, {0, 3}});
    const CyclotomicFactorization f = cyclotomic_factorization(p);
    CHECK(f.multiplicities == CyclotomicMultiplicities{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}});
    CHECK(associates(f.rest, poly({{2, 1}, {0, 3}})));
  }

  TEST_CASE("expand and normalize round trip") {
    for (std::int64_t a = 1; a <= 12; ++a) {
      for (std::int64_t c = 1; c <= 12; ++c) {
        const CycloProduct p = b(a) * b(c, 2) / b(gcd(a, c));
        const CyclotomicFactorization f = cyclotomic_factorization(cyclo_expand(p));
        CHECK(f.multiplicities == cyclo_normalize(p));
        CHECK(f.rest.is_unit());
        CHECK(cyclo_expand(CycloProduct::from_multiplicities(f.multiplicities)) == canonical(cyclo_expand(p)));
      }
    }
  }
}
