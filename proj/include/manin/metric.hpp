#pragma once

#include "manin/lie_algebra.hpp"

namespace manin {

/// Lie algebra with a nondegenerate ad-invariant symmetric bilinear form.
template <class S>
class MetricalLieAlgebra {
 public:
  MetricalLieAlgebra() = default;
  MetricalLieAlgebra(LieAlgebra<S> algebra, Mat<S> gram)
      : algebra_(std::move(algebra)), gram_(std::move(gram)) {
    if (gram_.rows() != algebra_.dim() || gram_.cols() != algebra_.dim())
      throw std::invalid_argument("metric: Gram matrix shape mismatch");
  }

  const LieAlgebra<S>& algebra() const { return algebra_; }
  const Mat<S>& gram() const { return gram_; }
  int dim() const { return algebra_.dim(); }

  S pair(const Vec<S>& x, const Vec<S>& y) const {
    S out = ScalarTraits<S>::zero();
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) out += x[i] * gram_(i, j) * y[j];
    return out;
  }

  bool is_degenerate(const S& tol) const { return !(ScalarTraits<S>::abs(det(gram_)) > tol); }

  /// g([X,Y],Z) = g(X,[Y,Z]) over all basis triples; also checks symmetry.
  CheckReport<S> check_invariance(const S& tol) const {
    CheckReport<S> rep;
    rep.check = "metric-invariance";
    int n = dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rep.absorb(ScalarTraits<S>::abs(gram_(i, j) - gram_(j, i)));
        Vec<S> bij = algebra_.bracket_basis(i, j);
        for (int k = 0; k < n; ++k) {
          S lhs = ScalarTraits<S>::zero();
          for (int m = 0; m < n; ++m) lhs += bij[m] * gram_(m, k);
          Vec<S> bjk = algebra_.bracket_basis(j, k);
          S rhs = ScalarTraits<S>::zero();
          for (int m = 0; m < n; ++m) rhs += gram_(i, m) * bjk[m];
          rep.absorb(ScalarTraits<S>::abs(lhs - rhs));
        }
      }
    rep.finish(tol);
    return rep;
  }

  /// Musical maps: lower(v) = G v (covector coordinates), raise = G^{-1}.
  Vec<S> lower(const Vec<S>& v) const { return gram_ * v; }
  Vec<S> raise(const Vec<S>& covector) const {
    Mat<S> rhs(dim(), 1);
    for (int i = 0; i < dim(); ++i) rhs(i, 0) = covector[i];
    Mat<S> x = solve(gram_, rhs);
    Vec<S> out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = x(i, 0);
    return out;
  }

  /// Given two complementary index sets, returns the basis of the second
  /// subspace dual to the basis of the first: g(X_i, Y_j) = delta_ij.
  /// Output columns are coordinates of the Y_j in the full basis.
  Mat<S> dual_basis(const std::vector<int>& span_idx, const std::vector<int>& dual_from_idx) const {
    if (span_idx.size() != dual_from_idx.size())
      throw std::invalid_argument("dual_basis: index sets of different size");
    int m = int(span_idx.size());
    Mat<S> pairing(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) pairing(r, c) = gram_(span_idx[r], dual_from_idx[c]);
    Mat<S> coeff = solve(pairing, Mat<S>::identity(m));
    Mat<S> out(dim(), m);
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < m; ++r) out(dual_from_idx[r], j) = coeff(r, j);
    return out;
  }

  /// Orthogonal projection onto the span of the given basis columns.
  Mat<S> projection_onto(const Mat<S>& span_cols, const Mat<S>& complement_cols) const {
    int n = dim();
    if (span_cols.cols() + complement_cols.cols() != n)
      throw std::invalid_argument("projection_onto: columns do not span");
    Mat<S> basis(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < span_cols.cols(); ++c) basis(r, c) = span_cols(r, c);
      for (int c = 0; c < complement_cols.cols(); ++c) basis(r, span_cols.cols() + c) = complement_cols(r, c);
    }
    Mat<S> inv = inverse(basis);
    Mat<S> sel(n, n);
    for (int c = 0; c < span_cols.cols(); ++c) sel(c, c) = ScalarTraits<S>::one();
    return basis * sel * inv;
  }

  /// G-skewness defect of an operator: G R + R^T G.
  S skew_defect(const Mat<S>& op) const { return (gram_ * op + op.transpose() * gram_).max_abs(); }

  /// Skew part extraction is deliberately absent: non-skew operators are
  /// allowed and flagged by callers instead of being symmetrized away.
 private:
  LieAlgebra<S> algebra_;
  Mat<S> gram_;
};

template <class S>
MetricalLieAlgebra<double> to_float(const MetricalLieAlgebra<S>& M) {
  return MetricalLieAlgebra<double>(to_float(M.algebra()), to_float(M.gram()));
}

}  // namespace manin
