#include "splice_alex/module.hpp"

#include <algorithm>

#include "splice_alex/error.hpp"

namespace splice_alex {

std::vector<JordanBlock> expand_jordan_counts(const JordanCounts& counts) {
  std::vector<JordanBlock> out;
  for (const auto& [key, count] : counts) {
    const auto& [order, size] = key;
    if (count < 0) {
      throw Error(ErrorCode::BlockCountNegative,
                  std::to_string(count) + " blocks of size " + std::to_string(size) +
                      " at primitive roots of order " + std::to_string(order));
    }
    if (count == 0) continue;
    for (const RootOfUnity& z : RootOfUnity::primitive_roots(order)) out.push_back({z, size, count});
  }
  std::sort(out.begin(), out.end(), [](const JordanBlock& a, const JordanBlock& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return a.size < b.size;
  });
  return out;
}

std::int64_t jordan_dimension(const std::vector<JordanBlock>& blocks) {
  std::int64_t total = 0;
  for (const auto& b : blocks) total = checked_add(total, checked_mul(b.size, b.count));
  return total;
}

CyclotomicMultiplicities jordan_multiplicities(const std::vector<JordanBlock>& blocks) {
  // Every primitive root of one order carries the same blocks; read them
  // off the representative exp(2 pi i/n).
  CyclotomicMultiplicities out;
  for (const auto& b : blocks) {
    const std::int64_t n = b.eigenvalue.order();
    if (b.eigenvalue != RootOfUnity(1, n)) continue;
    out[b.eigenvalue.order()] += b.size * b.count;
  }
  return out;
}

ModuleDescriptor presentation_to_module(const PolyMatrix& m) {
  const SnfResult snf = smith_normal_form(m);
  ModuleDescriptor out;
  out.free_rank = snf.rank_defect;
  CyclotomicMultiplicities order;
  JordanCounts counts;
  for (const LaurentPoly& f : snf.invariant_factors) {
    if (f.span() == 0) continue;
    CyclotomicFactorization fac = cyclotomic_factorization(f);
    if (fac.rest.span() != 0) {
      throw Error(ErrorCode::NotRootOfUnityTorsion,
                  "invariant factor " + to_string(f) + " has the non-cyclotomic factor " + to_string(fac.rest));
    }
    for (const auto& [n, mult] : fac.multiplicities) {
      order[n] += mult;
      ++counts[{n, mult}];
    }
  }
  out.order_ideal = CycloProduct::from_multiplicities(order);
  out.jordan_blocks = expand_jordan_counts(counts);
  return out;
}

}  // namespace splice_alex
