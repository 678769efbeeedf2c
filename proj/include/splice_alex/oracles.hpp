#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "splice_alex/matrix.hpp"
#include "splice_alex/module.hpp"
#include "splice_alex/splice_diagram.hpp"

namespace splice_alex {

/// Monodromy on the boundary basis T_1^1..T_1^{d_1}, ..., T_n^1..T_n^{d_n - d}
/// of the planar part of the fiber. Columns are images of basis vectors:
/// each T_i cycles within its block, and the image of the last T_n is minus
/// the sum of every T_i^j with j = 1 mod d. Throws InvalidGcdChain unless d
/// divides every d_i.
IntMatrix build_h_b(const std::vector<std::int64_t>& d_list, std::int64_t d);

struct BoundaryCheck {
  bool agree = false;
  /// Read off the Smith form of H_B^T - tI.
  ModuleDescriptor from_matrix;
  /// Direct sum of the closed-form cyclic summands.
  ModuleDescriptor from_formula;
  std::vector<CycloProduct> summands;
  std::string report;
};

/// Compares the module presented by H_B^T - tI with the closed form, per
/// eigenvalue and block size.
BoundaryCheck verify_a_b(const std::vector<std::int64_t>& d_list, std::int64_t d);

/// Letter of a free-group word: generator index and exponent +-1.
using FreeWord = std::vector<std::pair<int, int>>;

/// Image of the Fox derivative d(word)/d(generator) under the map sending
/// generator g to t^{abelianization[g]}.
LaurentPoly fox_derivative(const FreeWord& word, int generator, const std::vector<std::int64_t>& abelianization);

/// Alexander polynomial of the (p, q) torus knot from the presentation
/// <x, y | x^p y^-q>, x -> t^q, y -> t^p. For a deficiency-one presentation
/// the image A_x of the Fox derivative in x satisfies
/// A_x * (t - 1) = Delta * (t^{phi(y)} - 1) up to units, so Delta is the
/// exact quotient A_x (t - 1) / (t^p - 1). The y-derivative gives the same
/// answer through (t^q - 1), which is checked. Throws NotCoprime.
LaurentPoly torus_knot_delta_fox(std::int64_t p, std::int64_t q);

/// The single-node diagram of the (p, q) torus knot: leaves weighted p and
/// q, one arrowhead of multiplicity 1 on an edge weighted 1.
SpliceDiagram torus_knot_diagram(std::int64_t p, std::int64_t q);

struct FiberSummary {
  std::vector<std::int64_t> boundary_counts;
  std::int64_t genus = 0;
  std::int64_t rank_h1_fiber = 0;
  std::int64_t rank_h1_closed_fiber = 0;
  std::int64_t components = 0;
};

/// Homology bookkeeping of the fiber: rank H_1(F) = deg delta
/// = 2dg + sum_{i<n} d_i + (d_n - d). Throws NonIntegralGenus when g is not
/// a nonnegative integer.
FiberSummary fiber_summary(const SpliceDiagram& d);

}  // namespace splice_alex
