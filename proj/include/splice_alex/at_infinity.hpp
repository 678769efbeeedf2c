#pragma once

#include <cstdint>
#include <string>

#include "splice_alex/module.hpp"
#include "splice_alex/splice_diagram.hpp"

namespace splice_alex {

/// (t-1)^{n-1} (t^d - 1) delta / prod_i (t^{d_i} - 1): order of the torsion
/// of the Alexander module of the boundary link of the fiber.
CycloProduct order_ideal_tilde_delta(const SpliceDiagram& d);

/// Alexander module over C[t^{+-1}] of the link at infinity: free rank
/// sum (d_i - 1), torsion of order tilde_delta. The Jordan table is the
/// multilink table with the (simple) A_B roots removed from the 1x1 counts,
/// plus n-1 extra 1x1 blocks at t = 1.
ModuleDescriptor at_infinity_module(const SpliceDiagram& d);

/// What is known of A(L'; Q) for L' the boundary of the fiber.
struct RationalSummary {
  std::int64_t free_rank = 0;
  /// Number of Q[t^{+-1}]/(t-1) summands.
  std::int64_t t_minus_one_summands = 0;
  /// The A_G (x) Q summand has no closed form; always "undetermined".
  std::string a_g_status = "undetermined";
  std::string caveat;
};

RationalSummary boundary_link_rational_summary(const SpliceDiagram& d);

}  // namespace splice_alex
