#include <doctest.h>

#include "splice_alex/at_infinity.hpp"
#include "splice_alex/error.hpp"
#include "splice_alex/multilink.hpp"
#include "support/fixtures.hpp"

using namespace splice_alex;
using namespace splice_alex::testing;

namespace {

CycloProduct b(std::int64_t a, std::int64_t e = 1) { return CycloProduct::binomial(a, e); }

}  // namespace

TEST_SUITE("at_infinity") {
  TEST_CASE("curve family") {
    for (auto [p, q, r] : {std::tuple{3, 1, 2}, {5, 2, 3}, {4, 1, 3}}) {
      const SpliceDiagram d = curve_family(p, q, r);
      const CycloProduct expected = b(1, 2) * b(p * r) / (b(p) * b(r));
      CHECK(cyclo_normalize(order_ideal_tilde_delta(d)) == cyclo_normalize(expected));
      const ModuleDescriptor m = at_infinity_module(d);
      CHECK(m.free_rank == r - 1);
      for (const auto& blk : m.jordan_blocks) CHECK(blk.size == 1);
      CHECK(jordan_multiplicities(m.jordan_blocks) == cyclo_normalize(expected));
      const RationalSummary s = boundary_link_rational_summary(d);
      CHECK(s.free_rank == r - 1);
      CHECK(s.t_minus_one_summands == 1);
      CHECK(s.a_g_status == "undetermined");
    }
  }

  TEST_CASE("knots are unchanged") {
    const SpliceDiagram d = load_fixture("torus_2_3.splice");
    CHECK(order_ideal_tilde_delta(d) == characteristic_delta(d));
    const ModuleDescriptor m = at_infinity_module(d);
    CHECK(m.free_rank == 0);
    CHECK(m.jordan_blocks == multilink_module(d).jordan_blocks);
    const RationalSummary s = boundary_link_rational_summary(d);
    CHECK(s.free_rank == 0);
    CHECK(s.t_minus_one_summands == 0);
  }

  TEST_CASE("hopf link") {
    const SpliceDiagram d = load_fixture("hopf.splice");
    CHECK(cyclo_expand(order_ideal_tilde_delta(d)) == LaurentPoly::t_power_minus_one(1));
    const ModuleDescriptor m = at_infinity_module(d);
    CHECK(m.free_rank == 0);
    CHECK(m.jordan_blocks == std::vector<JordanBlock>{{RootOfUnity(0, 1), 1, 1}});
    CHECK(boundary_link_rational_summary(d).t_minus_one_summands == 1);
  }

  TEST_CASE("tilde delta is (t-1)^{n-1} times the A_G order") {
    const SpliceDiagram d = load_fixture("two_node.splice");
    CHECK(cyclo_normalize(order_ideal_tilde_delta(d)) == cyclo_normalize(b(1) * split_module(d).a_g_order));
    CHECK(at_infinity_module(d).free_rank == 1);
  }

  TEST_CASE("zero multiplicity") {
    try {
      (void)order_ideal_tilde_delta(load_fixture("example_3_1_2.splice").with_multiplicities({1, 0}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::ZeroMultiplicity || e.code() == ErrorCode::NotFibered));
    }
  }
}
