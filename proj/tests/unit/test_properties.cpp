#include <doctest.h>

#include <numeric>
#include <random>

#include "splice_alex/at_infinity.hpp"
#include "splice_alex/multilink.hpp"
#include "splice_alex/oracles.hpp"
#include "support/fuzz.hpp"

using namespace splice_alex;
using namespace splice_alex::testing;

namespace {

SpliceDiagram negated(const SpliceDiagram& d) {
  std::vector<std::int64_t> m = d.multiplicities();
  for (auto& x : m) x = -x;
  return d.with_multiplicities(m);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("fuzzed fibered diagrams") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
      const SpliceDiagram d = random_fibered_diagram(rng);
      CAPTURE(serialize(d));
      const ComponentGcds g = component_gcds(d);
      const CycloProduct delta = characteristic_delta(d);
      CHECK(delta.is_polynomial());
      CHECK(fiber_summary(d).genus >= 0);

      const CycloProduct tilde = order_ideal_tilde_delta(d);
      CHECK(tilde.is_polynomial());
      const auto n = static_cast<std::int64_t>(g.d_list.size());
      CHECK(cyclo_normalize(tilde) == cyclo_normalize(CycloProduct::binomial(1, n - 1) * split_module(d).a_g_order));

      const ModuleDescriptor m = multilink_module(d);
      CHECK(jordan_dimension(m.jordan_blocks) == delta.degree());
      const ModuleDescriptor inf = at_infinity_module(d);
      CHECK(inf.free_rank == std::accumulate(g.d_list.begin(), g.d_list.end(), std::int64_t{0}) - n);

      const SpliceDiagram neg = negated(d);
      CHECK(cyclo_normalize(characteristic_delta(neg)) == cyclo_normalize(delta));
      CHECK(cyclo_normalize(order_ideal_tilde_delta(neg)) == cyclo_normalize(tilde));

      std::vector<std::size_t> order(d.arrowheads().size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const SpliceDiagram perm = d.with_arrowhead_order(order);
      CHECK(cyclo_normalize(characteristic_delta(perm)) == cyclo_normalize(delta));
      CHECK(cyclo_normalize(order_ideal_tilde_delta(perm)) == cyclo_normalize(tilde));
      CHECK(at_infinity_module(perm).jordan_blocks == inf.jordan_blocks);
      CHECK(verify_a_b(g.d_list, g.d).agree);
    }
  }
}
