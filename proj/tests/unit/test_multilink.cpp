#include <doctest.h>

#include "splice_alex/error.hpp"
#include "splice_alex/multilink.hpp"
#include "splice_alex/oracles.hpp"
#include "support/fixtures.hpp"
#include "support/poly.hpp"

using namespace splice_alex;
using namespace splice_alex::testing;

namespace {

CycloProduct b(std::int64_t a, std::int64_t e = 1) { return CycloProduct::binomial(a, e); }

std::vector<JordanBlock> simple_blocks(const CyclotomicMultiplicities& m) {
  JordanCounts counts;
  for (const auto& [n, k] : m) counts[{n, 1}] = k;
  return expand_jordan_counts(counts);
}

}  // namespace

TEST_SUITE("multilink_invariants") {
  TEST_CASE("torus knot") {
    const SpliceDiagram d = load_fixture("torus_2_3.splice");
    const CycloProduct delta = characteristic_delta(d);
    CHECK(cyclo_normalize(delta) == cyclo_normalize(b(1) * b(6) / (b(2) * b(3))));
    CHECK(canonical(cyclo_expand(delta)) == torus_knot_delta_fox(2, 3));
    CHECK(delta_prime(d).is_one());
    const ModuleDescriptor m = multilink_module(d);
    CHECK(m.jordan_blocks == std::vector<JordanBlock>{{RootOfUnity(1, 6), 1, 1}, {RootOfUnity(5, 6), 1, 1}});
    const SplitModule s = split_module(d);
    CHECK(s.a_b_summands.empty());
    CHECK(cyclo_normalize(s.a_g_order) == cyclo_normalize(delta));
  }

  TEST_CASE("curve family") {
    for (auto [p, q, r] : {std::tuple{3, 1, 2}, {5, 2, 3}, {4, 1, 3}}) {
      const SpliceDiagram d = curve_family(p, q, r);
      const CycloProduct expected = b(1) * b(p * r) / b(p);
      CHECK(characteristic_delta(d) == expected);
      CHECK(delta_prime(d).is_one());
      const ModuleDescriptor m = multilink_module(d);
      CHECK(m.free_rank == 0);
      CHECK(m.jordan_blocks == simple_blocks(cyclo_normalize(expected)));
      const SplitModule s = split_module(d);
      REQUIRE(s.a_b_summands.size() == 1);
      CHECK(cyclo_normalize(s.a_b_summands[0]) == cyclo_normalize(b(r)));
      CHECK(cyclo_normalize(s.a_g_order) == cyclo_normalize(b(1) * b(p * r) / (b(p) * b(r))));
    }
    CHECK(to_string(characteristic_delta(curve_family(3, 1, 2))) == "(t-1)*(t^6-1)*(t^3-1)^-1");
  }

  TEST_CASE("hopf link") {
    const SpliceDiagram d = load_fixture("hopf.splice");
    // Seifert matrix V = [-1] of the annulus: det(V - t V^T) = t - 1.
    const LaurentPoly seifert = LaurentPoly(-1) - LaurentPoly::monomial(-1, 1);
    CHECK(associates(cyclo_expand(characteristic_delta(d)), seifert));
    CHECK(cyclo_expand(characteristic_delta(d)) == LaurentPoly::t_power_minus_one(1));
    CHECK(multilink_module(d).jordan_blocks == std::vector<JordanBlock>{{RootOfUnity(0, 1), 1, 1}});
  }

  TEST_CASE("two nodes") {
    const SpliceDiagram d = load_fixture("two_node.splice");
    CHECK(delta_prime(d).is_one());
    const CycloProduct delta = characteristic_delta(d);
    CHECK(delta == b(1) * b(18) * b(16) / (b(9) * b(8)));
    CHECK(jordan_dimension(multilink_module(d).jordan_blocks) == delta.degree());
  }

  TEST_CASE("2x2 blocks come from delta prime") {
    const SpliceDiagram d = load_fixture("jordan_2x2.splice");
    REQUIRE(validate(d).ok());
    CHECK(cyclo_normalize(delta_prime(d)) == CyclotomicMultiplicities{{4, 1}, {8, 1}});
    const ModuleDescriptor m = multilink_module(d);
    std::vector<RootOfUnity> doubled;
    for (const auto& blk : m.jordan_blocks) {
      if (blk.size == 2) doubled.push_back(blk.eigenvalue);
    }
    CHECK(doubled == std::vector<RootOfUnity>{{1, 4}, {3, 4}, {1, 8}, {3, 8}, {5, 8}, {7, 8}});
    CHECK(jordan_dimension(m.jordan_blocks) == characteristic_delta(d).degree());
  }

  TEST_CASE("errors") {
    const SpliceDiagram no_twist = parse_diagram(
        "splice v1\nuniform_twists false\nvertex n node\nvertex a arrow 1\nvertex b arrow 1\n"
        "edge n a 1 _\nedge n b 1 _\n");
    try {
      (void)multilink_module(no_twist);
      FAIL("expected NoUniformTwists");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoUniformTwists);
    }
    CHECK_THROWS_AS(characteristic_delta(load_fixture("non_coprime.splice")), Error);
    // m = (1, -1) on the Hopf diagram leaves the node with m(v) = 0.
    try {
      (void)characteristic_delta(load_fixture("hopf.splice").with_multiplicities({1, -1}));
      FAIL("expected NotFibered");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFibered);
    }
  }

  TEST_CASE("boundary summands telescope") {
    const std::vector<std::int64_t> d_list{4, 6, 9, 2};
    CycloProduct prod;
    for (const auto& s : boundary_summands(d_list)) prod *= s;
    // Product of (t^{D_i}-1)(t^{d_{i+1}}-1)/(t^{D_{i+1}}-1) = (t^{d_1}-1) prod_{i>1}(t^{d_i}-1) / (t^{D_n}-1).
    CHECK(cyclo_normalize(prod) == cyclo_normalize(b(4) * b(6) * b(9) * b(2) / b(1)));
  }
}
