#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "splice_alex/cyclotomic.hpp"
#include "splice_alex/matrix.hpp"

namespace splice_alex {

struct JordanBlock {
  RootOfUnity eigenvalue;
  std::int64_t size = 1;
  std::int64_t count = 0;

  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Free rank plus torsion data of a finitely generated C[t^{+-1}]-module
/// whose torsion is supported at roots of unity.
struct ModuleDescriptor {
  std::int64_t free_rank = 0;
  CycloProduct order_ideal;
  /// Sorted by eigenvalue, then block size. Counts are positive.
  std::vector<JordanBlock> jordan_blocks;
};

/// Block counts keyed by (order of the eigenvalue, block size). Every
/// primitive root of a given order carries the same blocks.
using JordanCounts = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

/// Expands per-order counts into the per-eigenvalue table. Zero counts are
/// dropped; negative counts throw BlockCountNegative.
std::vector<JordanBlock> expand_jordan_counts(const JordanCounts& counts);

/// Sum of size * count over the table.
std::int64_t jordan_dimension(const std::vector<JordanBlock>& blocks);

/// Total root multiplicity per eigenvalue order, read off a Jordan table.
CyclotomicMultiplicities jordan_multiplicities(const std::vector<JordanBlock>& blocks);

/// Reads the module presented by m (rows are relations, columns are
/// generators) off its Smith normal form. Throws NotRootOfUnityTorsion if
/// some invariant factor has a root that is not a root of unity.
ModuleDescriptor presentation_to_module(const PolyMatrix& m);

}  // namespace splice_alex
