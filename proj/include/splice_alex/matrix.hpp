#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "splice_alex/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<splice_alex::LaurentPoly> : GenericNumTraits<splice_alex::LaurentPoly> {
  using Real = splice_alex::LaurentPoly;
  using NonInteger = splice_alex::LaurentPoly;
  using Nested = splice_alex::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
};

}  // namespace Eigen

namespace splice_alex {

using PolyMatrix = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct SnfResult {
  /// Nonzero diagonal entries in canonical form, each dividing the next.
  std::vector<LaurentPoly> invariant_factors;
  /// Columns (generators) not killed by a nonzero diagonal entry.
  std::int64_t rank_defect = 0;
};

/// left * input * right == diagonal with left, right invertible over the ring.
struct SnfDecomposition {
  SnfResult result;
  PolyMatrix left;
  PolyMatrix right;
  PolyMatrix diagonal;
};

/// Smith normal form over Q[t^{+-1}]. Pivots on the nonzero entry of least
/// span, ties going to the lowest row and then the lowest column.
SnfResult smith_normal_form(const PolyMatrix& m);
SnfDecomposition smith_decomposition(const PolyMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
LaurentPoly determinant(const PolyMatrix& m);

/// h^T - t I, the presentation matrix of multiplication by t on Z^k with
/// t acting through h.
PolyMatrix characteristic_presentation(const IntMatrix& h);

PolyMatrix to_poly_matrix(const IntMatrix& m);

}  // namespace splice_alex
