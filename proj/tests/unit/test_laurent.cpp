#include <doctest.h>

#include "splice_alex/error.hpp"
#include "splice_alex/laurent.hpp"
#include "support/poly.hpp"

using namespace splice_alex;
using splice_alex::testing::poly;

TEST_SUITE("laurent_ring") {
  TEST_CASE("arithmetic and rendering") {
    const LaurentPoly a = poly({{2, 1}, {1, -1}, {0, 1}});
    CHECK(to_string(a) == "t^2-t+1");
    CHECK(to_string(LaurentPoly::monomial(Rational(2, 3), 1)) == "2/3*t");
    CHECK(to_string(LaurentPoly::monomial(1, -1)) == "t^-1");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(a * LaurentPoly::t_power_minus_one(1) == poly({{3, 1}, {2, -2}, {1, 2}, {0, -1}}));
    CHECK((a - a).is_zero());
    CHECK(a.shifted(-2).low_exponent() == -2);
    CHECK(a.span() == 2);
    CHECK(pow(LaurentPoly::t_power_minus_one(1), 3) == poly({{3, 1}, {2, -3}, {1, 3}, {0, -1}}));
  }

  TEST_CASE("euclidean division") {
    const LaurentPoly a = LaurentPoly::t_power_minus_one(6);
    const LaurentPoly b = LaurentPoly::t_power_minus_one(4).shifted(-3);
    const DivMod qr = euclidean_divide(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.span() < b.span());
    CHECK(exact_quotient(a, LaurentPoly::t_power_minus_one(3)) == poly({{3, 1}, {0, 1}}));
    CHECK_THROWS_AS(exact_quotient(a, LaurentPoly::t_power_minus_one(4)), Error);
    CHECK_THROWS_AS(euclidean_divide(a, LaurentPoly()), Error);
  }

  TEST_CASE("gcd") {
    CHECK(poly_gcd(LaurentPoly::t_power_minus_one(6), LaurentPoly::t_power_minus_one(4)) ==
          LaurentPoly::t_power_minus_one(2));
    CHECK(poly_gcd(LaurentPoly::t_power_minus_one(5), LaurentPoly(1)) == LaurentPoly(1));
    CHECK(poly_gcd(LaurentPoly::t_power_minus_one(3), LaurentPoly::t_power_minus_one(3)) ==
          LaurentPoly::t_power_minus_one(3));
    CHECK(poly_gcd(LaurentPoly(), LaurentPoly::t_power_minus_one(3)) == LaurentPoly::t_power_minus_one(3));
    try {
      (void)poly_gcd(LaurentPoly(), LaurentPoly());
      FAIL("expected BothZero");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BothZero);
    }
  }

  TEST_CASE("canonical form absorbs units of Q[t^+-1]") {
    const LaurentPoly p = poly({{5, Rational(-3, 2)}, {3, Rational(3, 4)}});
    CHECK(canonical(p) == poly({{2, 2}, {0, -1}}));
    CHECK(associates(p, poly({{2, -4}, {0, 2}}).shifted(7)));
    CHECK_FALSE(associates(p, LaurentPoly::t_power_minus_one(2)));
  }

  TEST_CASE("gcd identity for binomials") {
    for (std::int64_t a = 1; a <= 30; ++a) {
      for (std::int64_t b = 1; b <= 30; ++b) {
        std::int64_t g = a, h = b;
        while (h) g = std::exchange(h, g % h);
        CHECK(poly_gcd(LaurentPoly::t_power_minus_one(a), LaurentPoly::t_power_minus_one(b)) ==
              LaurentPoly::t_power_minus_one(g));
      }
    }
  }
}
