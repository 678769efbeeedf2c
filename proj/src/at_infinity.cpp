#include "splice_alex/at_infinity.hpp"

#include "splice_alex/error.hpp"
#include "splice_alex/multilink.hpp"

namespace splice_alex {

CycloProduct order_ideal_tilde_delta(const SpliceDiagram& d) {
  const ComponentGcds gcds = component_gcds(d);
  const CycloProduct delta = characteristic_delta(d);
  const auto n = static_cast<std::int64_t>(gcds.d_list.size());
  CycloProduct out = CycloProduct::binomial(1, n - 1) * CycloProduct::binomial(gcds.d) * delta;
  for (std::int64_t di : gcds.d_list) out = out / CycloProduct::binomial(di);
  if (!out.is_polynomial()) {
    throw Error(ErrorCode::NotAPolynomial, "tilde delta = " + to_string(out) + " is not a polynomial");
  }
  return out;
}

ModuleDescriptor at_infinity_module(const SpliceDiagram& d) {
  const ComponentGcds gcds = component_gcds(d);
  const CycloProduct tilde = order_ideal_tilde_delta(d);
  const ModuleDescriptor multilink = multilink_module(d);

  JordanCounts counts;
  for (const auto& b : multilink.jordan_blocks) {
    if (b.eigenvalue == RootOfUnity(1, b.eigenvalue.order())) counts[{b.eigenvalue.order(), b.size}] = b.count;
  }
  for (const CycloProduct& summand : boundary_summands(gcds.d_list)) {
    for (const auto& [n, k] : cyclo_normalize(summand)) {
      if (k != 1) {
        throw Error(ErrorCode::BlockCountNegative,
                    "A_B summand " + to_string(summand) + " is not squarefree at order " + std::to_string(n));
      }
      counts[{n, 1}] -= 1;
    }
  }
  counts[{1, 1}] += static_cast<std::int64_t>(gcds.d_list.size()) - 1;

  ModuleDescriptor out;
  for (std::int64_t di : gcds.d_list) out.free_rank += di - 1;
  out.order_ideal = tilde;
  out.jordan_blocks = expand_jordan_counts(counts);
  if (jordan_multiplicities(out.jordan_blocks) != cyclo_normalize(tilde)) {
    throw Error(ErrorCode::BlockCountNegative, "Jordan table does not account for tilde delta");
  }
  return out;
}

RationalSummary boundary_link_rational_summary(const SpliceDiagram& d) {
  const ComponentGcds gcds = component_gcds(d);
  // Validates the fibration hypothesis the statement rests on.
  (void)order_ideal_tilde_delta(d);
  RationalSummary out;
  for (std::int64_t di : gcds.d_list) out.free_rank += di - 1;
  out.t_minus_one_summands = static_cast<std::int64_t>(gcds.d_list.size()) - 1;
  out.caveat =
      "A_G tensor Q is not determined by the splice diagram alone; only its complex Jordan data is computed";
  return out;
}

}  // namespace splice_alex
