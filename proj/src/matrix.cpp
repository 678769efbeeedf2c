#include "splice_alex/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "splice_alex/error.hpp"

namespace splice_alex {

namespace {

PolyMatrix identity(Eigen::Index n) {
  PolyMatrix id(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) id(i, j) = LaurentPoly(i == j ? 1 : 0);
  }
  return id;
}

// Elementary operations on the working matrix, mirrored into the
// transformation matrices when they are tracked.
class Reducer {
 public:
  Reducer(const PolyMatrix& m, bool track) : d_(m), track_(track) {
    if (track_) {
      u_ = identity(m.rows());
      v_ = identity(m.cols());
    }
  }

  PolyMatrix& d() { return d_; }
  PolyMatrix& u() { return u_; }
  PolyMatrix& v() { return v_; }

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    for (Eigen::Index j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    if (track_) {
      for (Eigen::Index j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
    }
  }

  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    for (Eigen::Index i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    if (track_) {
      for (Eigen::Index i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
    }
  }

  // row[target] += factor * row[source]
  void add_row(Eigen::Index target, Eigen::Index source, const LaurentPoly& factor) {
    for (Eigen::Index j = 0; j < d_.cols(); ++j) {
      if (!d_(source, j).is_zero()) d_(target, j) += factor * d_(source, j);
    }
    if (track_) {
      for (Eigen::Index j = 0; j < u_.cols(); ++j) {
        if (!u_(source, j).is_zero()) u_(target, j) += factor * u_(source, j);
      }
    }
  }

  // col[target] += col[source] * factor
  void add_col(Eigen::Index target, Eigen::Index source, const LaurentPoly& factor) {
    for (Eigen::Index i = 0; i < d_.rows(); ++i) {
      if (!d_(i, source).is_zero()) d_(i, target) += d_(i, source) * factor;
    }
    if (track_) {
      for (Eigen::Index i = 0; i < v_.rows(); ++i) {
        if (!v_(i, source).is_zero()) v_(i, target) += v_(i, source) * factor;
      }
    }
  }

  void scale_row(Eigen::Index row, const LaurentPoly& unit) {
    for (Eigen::Index j = 0; j < d_.cols(); ++j) d_(row, j) *= unit;
    if (track_) {
      for (Eigen::Index j = 0; j < u_.cols(); ++j) u_(row, j) *= unit;
    }
  }

 private:
  PolyMatrix d_;
  PolyMatrix u_;
  PolyMatrix v_;
  bool track_;
};

std::optional<std::pair<Eigen::Index, Eigen::Index>> find_pivot(const PolyMatrix& d, Eigen::Index k) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  std::int64_t best_span = 0;
  for (Eigen::Index i = k; i < d.rows(); ++i) {
    for (Eigen::Index j = k; j < d.cols(); ++j) {
      if (d(i, j).is_zero()) continue;
      const std::int64_t s = d(i, j).span();
      if (!best || s < best_span) {
        best = {i, j};
        best_span = s;
      }
    }
  }
  return best;
}

// Moves the minimal-span entry of the trailing block to (k, k).
bool bring_pivot(Reducer& red, Eigen::Index k) {
  const auto pivot = find_pivot(red.d(), k);
  if (!pivot.has_value()) return false;
  const auto [i, j] = pivot.value();
  red.swap_rows(k, i);
  red.swap_cols(k, j);
  return true;
}

SnfDecomposition reduce(const PolyMatrix& m, bool track) {
  Reducer red(m, track);
  PolyMatrix& d = red.d();
  const Eigen::Index limit = std::min(d.rows(), d.cols());
  Eigen::Index k = 0;
  for (; k < limit; ++k) {
    if (!bring_pivot(red, k)) break;

    for (;;) {
      bool clean = true;
      for (Eigen::Index i = k + 1; i < d.rows(); ++i) {
        if (d(i, k).is_zero()) continue;
        auto [q, r] = euclidean_divide(d(i, k), d(k, k));
        red.add_row(i, k, -q);
        if (!r.is_zero()) clean = false;
      }
      for (Eigen::Index j = k + 1; j < d.cols(); ++j) {
        if (d(k, j).is_zero()) continue;
        auto [q, r] = euclidean_divide(d(k, j), d(k, k));
        red.add_col(j, k, -q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) {
        // A remainder of smaller span is now in row or column k.
        bring_pivot(red, k);
        continue;
      }

      std::optional<Eigen::Index> offending_row;
      for (Eigen::Index i = k + 1; i < d.rows() && !offending_row; ++i) {
        for (Eigen::Index j = k + 1; j < d.cols(); ++j) {
          if (!divides(d(k, k), d(i, j))) {
            offending_row = i;
            break;
          }
        }
      }
      if (!offending_row) break;
      red.add_row(k, *offending_row, LaurentPoly(1));
    }

    const LaurentPoly& pivot_entry = d(k, k);
    const LaurentPoly normal = canonical(pivot_entry);
    const LaurentPoly unit = exact_quotient(normal, pivot_entry);
    red.scale_row(k, unit);
  }

  SnfDecomposition out;
  for (Eigen::Index i = 0; i < k; ++i) out.result.invariant_factors.push_back(d(i, i));
  out.result.rank_defect = d.cols() - k;
  out.diagonal = std::move(d);
  out.left = std::move(red.u());
  out.right = std::move(red.v());
  return out;
}

}  // namespace

SnfResult smith_normal_form(const PolyMatrix& m) { return reduce(m, false).result; }

SnfDecomposition smith_decomposition(const PolyMatrix& m) { return reduce(m, true); }

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidDiagram, "determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return LaurentPoly(1);
  PolyMatrix a = m;
  LaurentPoly previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index swap_with = k + 1;
      while (swap_with < n && a(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return {};
      for (Eigen::Index j = 0; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), previous);
      }
    }
    previous = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

PolyMatrix to_poly_matrix(const IntMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = LaurentPoly(Rational(m(i, j)));
  }
  return out;
}

PolyMatrix characteristic_presentation(const IntMatrix& h) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::InvalidGcdChain, "monodromy matrix must be square");
  PolyMatrix out = to_poly_matrix(h.transpose());
  for (Eigen::Index i = 0; i < h.rows(); ++i) out(i, i) -= LaurentPoly::monomial(1, 1);
  return out;
}

}  // namespace splice_alex
