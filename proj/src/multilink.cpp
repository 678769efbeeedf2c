#include "splice_alex/multilink.hpp"

#include "splice_alex/error.hpp"

namespace splice_alex {

namespace {

void require_polynomial(const CycloProduct& p, const char* what) {
  if (!p.is_polynomial()) {
    throw Error(ErrorCode::NotAPolynomial, std::string(what) + " = " + to_string(p) + " is not a polynomial");
  }
}

void require_uniform_twists(const SpliceDiagram& d) {
  if (!d.uniform_twists()) {
    throw Error(ErrorCode::NoUniformTwists, "Jordan data needs a diagram declared with uniform twists");
  }
}

}  // namespace

CycloProduct characteristic_delta(const SpliceDiagram& d) {
  require_valid(d, true);
  std::int64_t g = 0;
  for (std::int64_t m : d.multiplicities()) g = gcd(g, m);
  if (g == 0) throw Error(ErrorCode::ZeroMultiplicity, "all multiplicities vanish");

  CycloProduct delta = CycloProduct::binomial(g);
  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    if (d.is_arrowhead(v)) continue;
    const auto exponent = static_cast<std::int64_t>(d.valency(v)) - 2;
    if (exponent == 0) continue;
    delta *= CycloProduct::binomial(checked_abs(virtual_multiplicity(d, v)), exponent);
  }
  require_polynomial(delta, "delta");
  return delta;
}

CycloProduct delta_prime(const SpliceDiagram& d) {
  require_valid(d, true);
  std::int64_t g = 0;
  for (std::int64_t m : d.multiplicities()) g = gcd(g, m);
  if (g == 0) throw Error(ErrorCode::ZeroMultiplicity, "all multiplicities vanish");

  CycloProduct out = CycloProduct::binomial(g);
  for (std::size_t e : internal_edges(d)) {
    const std::int64_t de = edge_invariant_dE(d, e);
    if (de == 0) throw Error(ErrorCode::ZeroGcd, "d_E vanishes on an internal edge");
    out *= CycloProduct::binomial(de);
  }
  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    if (d.is_node(v)) out *= CycloProduct::binomial(node_invariant_dv(d, v), -1);
  }
  return out;
}

ModuleDescriptor multilink_module(const SpliceDiagram& d) {
  require_uniform_twists(d);
  const CycloProduct delta = characteristic_delta(d);
  const CycloProduct dprime = delta_prime(d);
  const auto mult = cyclo_normalize(delta);
  const auto mult2 = cyclo_normalize(dprime);

  JordanCounts counts;
  for (const auto& [n, k] : mult2) {
    if (!mult.contains(n)) {
      throw Error(ErrorCode::BlockCountNegative,
                  "primitive roots of order " + std::to_string(n) + " divide delta' but not delta");
    }
    counts[{n, 2}] = k;
  }
  for (const auto& [n, k] : mult) {
    auto it = mult2.find(n);
    counts[{n, 1}] = k - 2 * (it == mult2.end() ? 0 : it->second);
  }

  ModuleDescriptor out;
  out.free_rank = 0;
  out.order_ideal = delta;
  out.jordan_blocks = expand_jordan_counts(counts);
  return out;
}

std::vector<CycloProduct> boundary_summands(const std::vector<std::int64_t>& d_list) {
  std::vector<CycloProduct> out;
  std::int64_t running = d_list.empty() ? 0 : d_list.front();
  for (std::size_t i = 0; i + 1 < d_list.size(); ++i) {
    const std::int64_t next = gcd(running, d_list[i + 1]);
    out.push_back(CycloProduct::binomial(running) * CycloProduct::binomial(d_list[i + 1]) /
                  CycloProduct::binomial(next));
    running = next;
  }
  return out;
}

SplitModule split_module(const SpliceDiagram& d) {
  const CycloProduct delta = characteristic_delta(d);
  const ComponentGcds gcds = component_gcds(d);
  SplitModule out;
  out.a_b_summands = boundary_summands(gcds.d_list);
  out.a_g_order = delta * CycloProduct::binomial(gcds.d);
  for (std::int64_t di : gcds.d_list) out.a_g_order = out.a_g_order / CycloProduct::binomial(di);
  require_polynomial(out.a_g_order, "a_g_order");
  return out;
}

}  // namespace splice_alex
