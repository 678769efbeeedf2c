#include "splice_alex/oracles.hpp"

#include <sstream>

#include "splice_alex/error.hpp"
#include "splice_alex/multilink.hpp"

namespace splice_alex {

IntMatrix build_h_b(const std::vector<std::int64_t>& d_list, std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidGcdChain, "d must be positive");
  if (d_list.empty()) throw Error(ErrorCode::InvalidGcdChain, "empty gcd chain");
  for (std::int64_t di : d_list) {
    if (di < 1 || di % d != 0) {
      throw Error(ErrorCode::InvalidGcdChain, std::to_string(d) + " does not divide " + std::to_string(di));
    }
  }

  const std::int64_t tail = d_list.back() - d;
  std::int64_t size = tail;
  for (std::size_t i = 0; i + 1 < d_list.size(); ++i) size += d_list[i];

  IntMatrix h = IntMatrix::Zero(size, size);
  Eigen::Index offset = 0;
  for (std::size_t i = 0; i + 1 < d_list.size(); ++i) {
    const Eigen::Index block = d_list[i];
    for (Eigen::Index j = 0; j < block; ++j) h(offset + (j + 1) % block, offset + j) = 1;
    offset += block;
  }
  if (tail > 0) {
    for (Eigen::Index j = 0; j + 1 < tail; ++j) h(offset + j + 1, offset + j) = 1;
    // Image of the last T_n: minus every T_i^j with local index j = 1 mod d.
    const Eigen::Index last = size - 1;
    Eigen::Index block_start = 0;
    for (std::size_t i = 0; i < d_list.size(); ++i) {
      const Eigen::Index block = i + 1 < d_list.size() ? d_list[i] : tail;
      for (Eigen::Index j = 0; j < block; j += d) h(block_start + j, last) = -1;
      block_start += block;
    }
  }
  return h;
}

namespace {

std::string describe(const ModuleDescriptor& m) {
  std::ostringstream os;
  os << "rank " << m.free_rank << ", order " << to_string(m.order_ideal.canonical_form()) << ", blocks [";
  for (std::size_t i = 0; i < m.jordan_blocks.size(); ++i) {
    const auto& b = m.jordan_blocks[i];
    if (i) os << ", ";
    os << to_string(b.eigenvalue) << ':' << b.size << 'x' << b.count;
  }
  os << ']';
  return os.str();
}

}  // namespace

BoundaryCheck verify_a_b(const std::vector<std::int64_t>& d_list, std::int64_t d) {
  BoundaryCheck out;
  out.from_matrix = presentation_to_module(characteristic_presentation(build_h_b(d_list, d)));

  out.summands = boundary_summands(d_list);
  JordanCounts counts;
  for (const CycloProduct& s : out.summands) {
    out.from_formula.order_ideal *= s;
    for (const auto& [n, k] : cyclo_normalize(s)) ++counts[{n, k}];
  }
  out.from_formula.jordan_blocks = expand_jordan_counts(counts);

  out.agree = out.from_matrix.free_rank == out.from_formula.free_rank &&
              associates(out.from_matrix.order_ideal, out.from_formula.order_ideal) &&
              out.from_matrix.jordan_blocks == out.from_formula.jordan_blocks;

  std::ostringstream os;
  os << "matrix:  " << describe(out.from_matrix) << '\n';
  os << "formula: " << describe(out.from_formula) << '\n';
  os << (out.agree ? "agree" : "DISAGREE");
  out.report = os.str();
  return out;
}

LaurentPoly fox_derivative(const FreeWord& word, int generator, const std::vector<std::int64_t>& abelianization) {
  LaurentPoly out;
  std::int64_t prefix = 0;
  for (const auto& [g, e] : word) {
    const std::int64_t image = abelianization.at(static_cast<std::size_t>(g));
    if (g == generator) {
      // d(x)/dx = 1, d(x^-1)/dx = -x^-1, each weighted by the prefix.
      if (e > 0) {
        out += LaurentPoly::monomial(1, prefix);
      } else {
        out -= LaurentPoly::monomial(1, prefix - image);
      }
    }
    prefix += e > 0 ? image : -image;
  }
  return out;
}

LaurentPoly torus_knot_delta_fox(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1 || gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "torus knot needs coprime p, q; got " + std::to_string(p) + ", " +
                                           std::to_string(q));
  }
  FreeWord relator;
  for (std::int64_t i = 0; i < p; ++i) relator.emplace_back(0, 1);
  for (std::int64_t i = 0; i < q; ++i) relator.emplace_back(1, -1);
  const std::vector<std::int64_t> abelianization{q, p};

  const LaurentPoly t_minus_one = LaurentPoly::t_power_minus_one(1);
  const LaurentPoly from_x =
      canonical(exact_quotient(fox_derivative(relator, 0, abelianization) * t_minus_one,
                               LaurentPoly::t_power_minus_one(p)));
  const LaurentPoly from_y =
      canonical(exact_quotient(fox_derivative(relator, 1, abelianization) * t_minus_one,
                               LaurentPoly::t_power_minus_one(q)));
  if (from_x != from_y) {
    throw Error(ErrorCode::NotAPolynomial,
                "Fox derivatives disagree: " + to_string(from_x) + " vs " + to_string(from_y));
  }
  return from_x;
}

SpliceDiagram torus_knot_diagram(std::int64_t p, std::int64_t q) {
  std::vector<Vertex> vertices{
      {"n", VertexKind::Node, 0},
      {"leaf_p", VertexKind::Leaf, 0},
      {"leaf_q", VertexKind::Leaf, 0},
      {"a", VertexKind::Arrowhead, 1},
  };
  std::vector<Edge> edges{
      {0, 1, p, std::nullopt},
      {0, 2, q, std::nullopt},
      {0, 3, 1, std::nullopt},
  };
  return SpliceDiagram(std::move(vertices), std::move(edges));
}

FiberSummary fiber_summary(const SpliceDiagram& d) {
  const ComponentGcds gcds = component_gcds(d);
  const CycloProduct delta = characteristic_delta(d);
  FiberSummary out;
  out.boundary_counts = gcds.d_list;
  out.components = gcds.d;
  out.rank_h1_fiber = delta.degree();

  std::int64_t boundary_rank = gcds.d_list.back() - gcds.d;
  std::int64_t all_boundary = 0;
  for (std::size_t i = 0; i < gcds.d_list.size(); ++i) {
    if (i + 1 < gcds.d_list.size()) boundary_rank += gcds.d_list[i];
    all_boundary += gcds.d_list[i];
  }
  const std::int64_t handles = out.rank_h1_fiber - boundary_rank;
  if (handles < 0 || handles % (2 * gcds.d) != 0) {
    throw Error(ErrorCode::NonIntegralGenus, "deg delta = " + std::to_string(out.rank_h1_fiber) +
                                                 " leaves " + std::to_string(handles) + " for 2dg with d = " +
                                                 std::to_string(gcds.d));
  }
  out.genus = handles / (2 * gcds.d);
  out.rank_h1_closed_fiber = 2 * gcds.d * out.genus + all_boundary - gcds.d;
  return out;
}

}  // namespace splice_alex
