#pragma once

#include <vector>

#include "splice_alex/cyclotomic.hpp"
#include "splice_alex/module.hpp"
#include "splice_alex/splice_diagram.hpp"

namespace splice_alex {

/// The split A = A_G + A_B of the Alexander module of a fibered multilink.
struct SplitModule {
  CycloProduct a_g_order;
  /// i-th entry: (t^{D_i}-1)(t^{d_{i+1}}-1)/(t^{D_{i+1}}-1), D_i = gcd(d_1..d_i).
  std::vector<CycloProduct> a_b_summands;
};

/// Characteristic polynomial of the monodromy,
/// (t^d - 1) * prod over non-arrowhead v of (t^{|m(v)|} - 1)^{valency(v) - 2}.
CycloProduct characteristic_delta(const SpliceDiagram& d);

/// (t^d - 1) * prod_{internal edges} (t^{d_E} - 1) / prod_{nodes} (t^{d_v} - 1);
/// its roots carry the 2x2 Jordan blocks.
CycloProduct delta_prime(const SpliceDiagram& d);

/// A(L(m); C): torsion of order delta, with mult(delta', z) blocks of size 2
/// and mult(delta, z) - 2 mult(delta', z) blocks of size 1 at each z.
ModuleDescriptor multilink_module(const SpliceDiagram& d);

/// A_B summands from a gcd chain, in the given order.
std::vector<CycloProduct> boundary_summands(const std::vector<std::int64_t>& d_list);

SplitModule split_module(const SpliceDiagram& d);

}  // namespace splice_alex
