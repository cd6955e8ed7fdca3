#pragma once

#include "manin/bialgebra.hpp"
#include "manin/rmatrix.hpp"
#include "manin/weights.hpp"

namespace manin {

/// Splitting of a metrical Lie algebra into subspaces given by basis
/// columns. zero empty = Manin decomposition; otherwise a (generalized)
/// Gauss decomposition with the metric nondegenerate on the middle block.
template <class S>
struct Decomposition {
  Mat<S> plus;
  Mat<S> zero;
  Mat<S> minus;

  bool is_manin() const { return zero.cols() == 0; }

  static Decomposition from_indices(int dim, const std::vector<int>& plus_idx,
                                    const std::vector<int>& minus_idx,
                                    const std::vector<int>& zero_idx = {}) {
    auto cols = [dim](const std::vector<int>& idx) {
      Mat<S> m(dim, int(idx.size()));
      for (size_t j = 0; j < idx.size(); ++j) m(idx[j], int(j)) = ScalarTraits<S>::one();
      return m;
    };
    return Decomposition{cols(plus_idx), cols(zero_idx), cols(minus_idx)};
  }

  /// Full basis [plus | zero | minus] as one matrix.
  Mat<S> full_basis() const {
    int n = plus.rows();
    Mat<S> f(n, plus.cols() + zero.cols() + minus.cols());
    for (int r = 0; r < n; ++r) {
      int c = 0;
      for (int j = 0; j < plus.cols(); ++j) f(r, c++) = plus(r, j);
      for (int j = 0; j < zero.cols(); ++j) f(r, c++) = zero(r, j);
      for (int j = 0; j < minus.cols(); ++j) f(r, c++) = minus(r, j);
    }
    return f;
  }
};

namespace detail {

template <class S>
Vec<S> column(const Mat<S>& m, int j) {
  Vec<S> v(m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = m(r, j);
  return v;
}

/// Max coordinate of v outside the coordinate window [lo, hi) after
/// expressing v in the given (invertible) basis.
template <class S>
S residual_outside(const Mat<S>& basis_inv, const Vec<S>& v, int lo, int hi) {
  Vec<S> coords = basis_inv * v;
  S res = ScalarTraits<S>::zero();
  for (int k = 0; k < int(coords.size()); ++k) {
    if (k >= lo && k < hi) continue;
    S a = ScalarTraits<S>::abs(coords[k]);
    if (res < a) res = a;
  }
  return res;
}

}  // namespace detail

/// Verifies the decomposition axioms: spanning, bracket-closed summands,
/// isotropy of the outer blocks, orthogonality to and nondegeneracy of the
/// middle block.
template <class S>
CheckReport<S> check_decomposition(const MetricalLieAlgebra<S>& M, const Decomposition<S>& dec, const S& tol) {
  CheckReport<S> rep;
  rep.check = dec.is_manin() ? "manin-decomposition" : "gauss-decomposition";
  int n = M.dim();
  Mat<S> basis = dec.full_basis();
  if (basis.cols() != n) throw std::invalid_argument("check_decomposition: blocks do not total dim");
  Mat<S> basis_inv = inverse(basis);
  int np = dec.plus.cols(), nz = dec.zero.cols();

  auto block_check = [&](const Mat<S>& blk, int lo, int hi, bool isotropic) {
    for (int i = 0; i < blk.cols(); ++i) {
      Vec<S> vi = detail::column(blk, i);
      for (int j = 0; j < blk.cols(); ++j) {
        Vec<S> vj = detail::column(blk, j);
        rep.absorb(detail::residual_outside(basis_inv, M.algebra().bracket(vi, vj), lo, hi));
        if (isotropic && j >= i) rep.absorb(ScalarTraits<S>::abs(M.pair(vi, vj)));
      }
    }
  };
  block_check(dec.plus, 0, np, true);
  block_check(dec.zero, np, np + nz, false);
  block_check(dec.minus, np + nz, n, true);

  // Middle block: orthogonal to the outer blocks, metric nondegenerate.
  for (int i = 0; i < nz; ++i) {
    Vec<S> zi = detail::column(dec.zero, i);
    for (int j = 0; j < np; ++j) rep.absorb(ScalarTraits<S>::abs(M.pair(zi, detail::column(dec.plus, j))));
    for (int j = 0; j < dec.minus.cols(); ++j)
      rep.absorb(ScalarTraits<S>::abs(M.pair(zi, detail::column(dec.minus, j))));
  }
  if (nz > 0) {
    Mat<S> gz(nz, nz);
    for (int i = 0; i < nz; ++i)
      for (int j = 0; j < nz; ++j) gz(i, j) = M.pair(detail::column(dec.zero, i), detail::column(dec.zero, j));
    if (ScalarTraits<S>::is_zero(det(gz))) {
      rep.pass = false;
      rep.check += " (degenerate middle metric)";
      return rep;
    }
  }
  rep.finish(tol);
  return rep;
}

/// Manin double l = g + g* of a bialgebra, with the canonical pairing
/// metric. Basis order: X_1..X_n (g), Y_1..Y_n (g*).
template <class S>
std::pair<MetricalLieAlgebra<S>, Decomposition<S>> manin_double(const Bialgebra<S>& bi) {
  const auto& g = bi.algebra();
  LieAlgebra<S> dual = bi.dual_algebra();
  int n = g.dim();
  std::vector<std::string> labels = g.labels();
  for (const auto& l : dual.labels()) labels.push_back(l);
  LieAlgebra<S> dbl(2 * n, labels);
  for (const auto& [key, c] : g.bracket_terms()) {
    auto [i, j, k] = key;
    dbl.add_bracket_term(i, j, k, c);
  }
  for (const auto& [key, c] : dual.bracket_terms()) {
    auto [i, j, k] = key;
    dbl.add_bracket_term(n + i, n + j, n + k, c);
  }
  // Mixed brackets [X_i, Y_j] = sum_m d(j,m,i) X_m - sum_m c(i,m,j) Y_m,
  // the unique extension making the pairing metric ad-invariant.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        S dm = dual.bracket_basis(j, m)[i];
        if (!ScalarTraits<S>::is_zero(dm)) dbl.add_bracket_term(i, n + j, m, dm);
        S cm = g.bracket_basis(i, m)[j];
        if (!ScalarTraits<S>::is_zero(cm)) dbl.add_bracket_term(i, n + j, n + m, -cm);
      }
    }
  Mat<S> gram(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    gram(i, n + i) = ScalarTraits<S>::one();
    gram(n + i, i) = ScalarTraits<S>::one();
  }
  std::vector<int> plus_idx, minus_idx;
  for (int i = 0; i < n; ++i) plus_idx.push_back(i);
  for (int i = 0; i < n; ++i) minus_idx.push_back(n + i);
  return {MetricalLieAlgebra<S>(dbl, gram), Decomposition<S>::from_indices(2 * n, plus_idx, minus_idx)};
}

/// Reads the bialgebra back off a Manin double in adapted coordinates
/// (plus block = g, minus block = g*); inverse of manin_double.
template <class S>
Bialgebra<S> bialgebra_from_double(const MetricalLieAlgebra<S>& M, const Decomposition<S>& dec) {
  int n = dec.plus.cols();
  Mat<S> basis_inv = inverse(dec.full_basis());
  LieAlgebra<S> g(n, std::vector<std::string>(n, "X"));
  CochainMap<S> cob(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> br = basis_inv * M.algebra().bracket(detail::column(dec.plus, i), detail::column(dec.plus, j));
      for (int k = 0; k < n; ++k)
        if (!ScalarTraits<S>::is_zero(br[k])) g.add_bracket_term(i, j, k, br[k]);
    }
  // Cobracket dual to the minus-side bracket through the metric pairing.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> br = basis_inv * M.algebra().bracket(detail::column(dec.minus, i), detail::column(dec.minus, j));
      for (int k = 0; k < n; ++k)
        if (!ScalarTraits<S>::is_zero(br[n + k]))
          cob.image(k).add_term((Blade(1) << i) | (Blade(1) << j), br[n + k]);
    }
  return Bialgebra<S>(g, cob);
}

/// T*g = g semidirect g* with the coadjoint action; the b' = 0 double.
template <class S>
std::pair<MetricalLieAlgebra<S>, Decomposition<S>> cotangent_double(const LieAlgebra<S>& g) {
  CochainMap<S> zero(g.dim(), 2);
  return manin_double(Bialgebra<S>(g, zero));
}

/// Ingredients of a double extension d + g + d*.
template <class S>
struct DoubleExtensionSpec {
  MetricalLieAlgebra<S> base;       // (g, g)
  LieAlgebra<S> derived;            // d
  std::vector<Mat<S>> action;      // rho(D_a) on g, one per d-basis element
};

/// Double extension g_d = d + g + d* by skew derivations. Rejects a non-skew
/// or non-derivation action up front.
template <class S>
MetricalLieAlgebra<S> double_extension(const DoubleExtensionSpec<S>& spec, const S& tol) {
  const auto& g = spec.base.algebra();
  const auto& d = spec.derived;
  int ng = g.dim(), nd = d.dim();
  if (int(spec.action.size()) != nd) throw std::invalid_argument("double_extension: one action matrix per d basis");
  for (const auto& rho : spec.action) {
    if (spec.base.skew_defect(rho) > tol) throw std::invalid_argument("double_extension: action is not g-skew");
    for (int i = 0; i < ng; ++i)
      for (int j = i + 1; j < ng; ++j) {
        Vec<S> lhs = rho * g.bracket_basis(i, j);
        Vec<S> rhs = g.bracket(rho * basis_vector<S>(ng, i), basis_vector<S>(ng, j)) +
                     g.bracket(basis_vector<S>(ng, i), rho * basis_vector<S>(ng, j));
        if (max_abs(lhs - rhs) > tol) throw std::invalid_argument("double_extension: action is not a derivation");
      }
  }
  // rho must also represent d.
  for (int a = 0; a < nd; ++a)
    for (int b = a + 1; b < nd; ++b) {
      Vec<S> dab = d.bracket_basis(a, b);
      Mat<S> lhs(ng, ng);
      for (int m = 0; m < nd; ++m)
        if (!ScalarTraits<S>::is_zero(dab[m])) lhs = lhs + spec.action[m] * dab[m];
      Mat<S> rhs = spec.action[a] * spec.action[b] - spec.action[b] * spec.action[a];
      if ((lhs - rhs).max_abs() > tol) throw std::invalid_argument("double_extension: action is not a representation");
    }

  int n = nd + ng + nd;
  std::vector<std::string> labels;
  for (const auto& l : d.labels()) labels.push_back(l);
  for (const auto& l : g.labels()) labels.push_back(l);
  for (const auto& l : d.labels()) labels.push_back(l + "*");
  LieAlgebra<S> ext(n, labels);
  for (const auto& [key, c] : d.bracket_terms()) {
    auto [i, j, k] = key;
    ext.add_bracket_term(i, j, k, c);
  }
  for (const auto& [key, c] : g.bracket_terms()) {
    auto [i, j, k] = key;
    ext.add_bracket_term(nd + i, nd + j, nd + k, c);
  }
  // [D_a, X_i] = rho(D_a) X_i
  for (int a = 0; a < nd; ++a)
    for (int i = 0; i < ng; ++i) {
      Vec<S> img = spec.action[a] * basis_vector<S>(ng, i);
      for (int k = 0; k < ng; ++k)
        if (!ScalarTraits<S>::is_zero(img[k])) ext.add_bracket_term(a, nd + i, nd + k, img[k]);
    }
  // [X_i, X_j] += c(X_i, X_j) with <D_a, c(X,Y)> = g(rho(D_a)X, Y)
  for (int i = 0; i < ng; ++i)
    for (int j = i + 1; j < ng; ++j)
      for (int a = 0; a < nd; ++a) {
        S v = spec.base.pair(spec.action[a] * basis_vector<S>(ng, i), basis_vector<S>(ng, j));
        if (!ScalarTraits<S>::is_zero(v)) ext.add_bracket_term(nd + i, nd + j, nd + ng + a, v);
      }
  // [D_a, alpha_b] = coadjoint action of d on d*
  for (int a = 0; a < nd; ++a)
    for (int b = 0; b < nd; ++b)
      for (int m = 0; m < nd; ++m) {
        S v = -d.bracket_basis(a, m)[b];
        if (!ScalarTraits<S>::is_zero(v)) ext.add_bracket_term(a, nd + ng + b, nd + ng + m, v);
      }
  Mat<S> gram(n, n);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j) gram(nd + i, nd + j) = spec.base.gram()(i, j);
  for (int a = 0; a < nd; ++a) {
    gram(a, nd + ng + a) = ScalarTraits<S>::one();
    gram(nd + ng + a, a) = ScalarTraits<S>::one();
  }
  return MetricalLieAlgebra<S>(ext, gram);
}

/// Orthogonal sum with a 1-dimensional abelian metrical line.
template <class S>
MetricalLieAlgebra<S> trivial_extension(const MetricalLieAlgebra<S>& M) {
  int n = M.dim();
  std::vector<std::string> labels = M.algebra().labels();
  labels.push_back("Z");
  LieAlgebra<S> ext(n + 1, labels);
  for (const auto& [key, c] : M.algebra().bracket_terms()) {
    auto [i, j, k] = key;
    ext.add_bracket_term(i, j, k, c);
  }
  Mat<S> gram(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = M.gram()(i, j);
  gram(n, n) = ScalarTraits<S>::one();
  return MetricalLieAlgebra<S>(ext, gram);
}

/// T*-extension g_w = a + a* by a 2-cochain w: a ^ a -> a*. The result is
/// metrical iff w has the cyclic property; this builder constructs either
/// way and leaves the verdict to the invariance check.
template <class S>
MetricalLieAlgebra<S> tstar_extension(const LieAlgebra<S>& a, const std::vector<std::vector<Vec<S>>>& w) {
  int n = a.dim();
  std::vector<std::string> labels = a.labels();
  for (const auto& l : a.labels()) labels.push_back(l + "*");
  LieAlgebra<S> ext(2 * n, labels);
  for (const auto& [key, c] : a.bracket_terms()) {
    auto [i, j, k] = key;
    ext.add_bracket_term(i, j, k, c);
  }
  // [a_i, a_j] += w(a_i, a_j) in a*.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!ScalarTraits<S>::is_zero(w[i][j][k])) ext.add_bracket_term(i, j, n + k, w[i][j][k]);
  // [a_i, alpha_j] = ad*(a_i) alpha_j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        S v = -a.bracket_basis(i, m)[j];
        if (!ScalarTraits<S>::is_zero(v)) ext.add_bracket_term(i, n + j, n + m, v);
      }
  Mat<S> gram(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    gram(i, n + i) = ScalarTraits<S>::one();
    gram(n + i, i) = ScalarTraits<S>::one();
  }
  return MetricalLieAlgebra<S>(ext, gram);
}

/// Cyclicity <a, w(b,c)> = <b, w(c,a)> over basis triples.
template <class S>
CheckReport<S> check_cyclic_cochain(const LieAlgebra<S>& a, const std::vector<std::vector<Vec<S>>>& w,
                                    const S& tol) {
  CheckReport<S> rep;
  rep.check = "cochain-cyclicity";
  int n = a.dim();
  auto wval = [&](int i, int j, int k) {  // <a_k, w(a_i, a_j)>
    if (i == j) return ScalarTraits<S>::zero();
    return i < j ? w[i][j][k] : -w[j][i][k];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) rep.absorb(ScalarTraits<S>::abs(wval(j, k, i) - wval(k, i, j)));
  rep.finish(tol);
  return rep;
}

/// R = pr_+ - pr_- of a Manin decomposition.
template <class S>
RMatrix<S> r_from_manin(const MetricalLieAlgebra<S>& M, const Decomposition<S>& dec, const S& tol) {
  if (!dec.is_manin()) throw std::invalid_argument("r_from_manin: Manin decomposition required");
  Mat<S> basis = dec.full_basis();
  Mat<S> sign(M.dim(), M.dim());
  for (int i = 0; i < dec.plus.cols(); ++i) sign(i, i) = ScalarTraits<S>::one();
  for (int i = dec.plus.cols(); i < M.dim(); ++i) sign(i, i) = -ScalarTraits<S>::one();
  return make_rmatrix(M, basis * sign * inverse(basis), tol);
}

/// diag(-1, R0, 1) extension of a middle-block solution to the whole
/// algebra; R0 is given in the zero-block basis coordinates.
template <class S>
RMatrix<S> r_from_gauss(const MetricalLieAlgebra<S>& M, const Decomposition<S>& dec, const Mat<S>& r0,
                        const S& tol) {
  int nz = dec.zero.cols();
  if (r0.rows() != nz || r0.cols() != nz) throw std::invalid_argument("r_from_gauss: R0 shape mismatch");
  if (nz > 0) {
    if (ScalarTraits<S>::is_zero(det(r0 - Mat<S>::identity(nz))) ||
        ScalarTraits<S>::is_zero(det(r0 + Mat<S>::identity(nz))))
      throw std::invalid_argument("r_from_gauss: R0 has eigenvalue +1 or -1");
  }
  Mat<S> basis = dec.full_basis();
  int np = dec.plus.cols(), n = M.dim();
  Mat<S> block(n, n);
  for (int i = 0; i < np; ++i) block(i, i) = ScalarTraits<S>::one();
  for (int i = 0; i < nz; ++i)
    for (int j = 0; j < nz; ++j) block(np + i, np + j) = r0(i, j);
  for (int i = np + nz; i < n; ++i) block(i, i) = -ScalarTraits<S>::one();
  return make_rmatrix(M, basis * block * inverse(basis), tol);
}

/// Cayley transform (A+1)(A-1)^{-1}; an involution, so it is its own
/// inverse map between fixed-point-free automorphisms and R-matrices
/// without eigenvalues +-1.
template <class S>
Mat<S> cayley(const Mat<S>& a) {
  int n = a.rows();
  Mat<S> am = a - Mat<S>::identity(n);
  if (ScalarTraits<S>::is_zero(det(am))) throw std::domain_error("cayley: fixed point (A - 1 singular)");
  return (a + Mat<S>::identity(n)) * inverse(am);
}

template <class S>
Mat<S> cayley_inverse(const Mat<S>& r) {
  return cayley(r);
}

/// Witness data for the isomorphism between the Manin double of b' = d(R o
/// g^{-1}) and the splitting of (g + g, g - g) into the diagonal and the
/// graph {((R+1)X, (R-1)X)}.
template <class S>
CheckReport<S> theorem222_witness(const MetricalLieAlgebra<S>& M, const RMatrix<S>& r, const S& tol) {
  CheckReport<S> rep;
  rep.check = "double-of-double-witness";
  const auto& L = M.algebra();
  int n = M.dim();
  LieAlgebra<S> sum = LieAlgebra<S>::direct_sum(L, L);
  Mat<S> gram2(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gram2(i, j) = M.gram()(i, j);
      gram2(n + i, n + j) = -M.gram()(i, j);
    }
  MetricalLieAlgebra<S> M2(sum, gram2);

  Mat<S> rp = r.op + Mat<S>::identity(n);
  Mat<S> rm = r.op - Mat<S>::identity(n);
  Decomposition<S> dec;
  dec.plus = Mat<S>(2 * n, n);
  dec.minus = Mat<S>(2 * n, n);
  dec.zero = Mat<S>(2 * n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      // diagonal
      dec.plus(i, j) = (i == j) ? ScalarTraits<S>::one() : ScalarTraits<S>::zero();
      dec.plus(n + i, j) = dec.plus(i, j);
      // graph of (R+1, R-1)
      dec.minus(i, j) = rp(i, j);
      dec.minus(n + i, j) = rm(i, j);
    }
  CheckReport<S> axioms = check_decomposition(M2, dec, tol);
  rep.absorb(axioms.max_violation);
  if (!axioms.pass) rep.pass = false;

  // X -> ((R+1)X, (R-1)X) is a homomorphism (g, b_R) -> g x g.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j);
      Vec<S> brij = b_r_bracket(M, r, xi, xj);
      rep.absorb(max_abs(L.bracket(rp * xi, rp * xj) - rp * brij));
      rep.absorb(max_abs(L.bracket(rm * xi, rm * xj) - rm * brij));
    }
  rep.finish(tol);
  rep.pass = rep.pass && axioms.pass;
  return rep;
}

/// Derived series of the span of the given columns terminates at 0.
template <class S>
bool is_solvable_subalgebra(const LieAlgebra<S>& L, Mat<S> span_cols, const S& tol) {
  for (int step = 0; step <= L.dim() + 1; ++step) {
    int k = span_cols.cols();
    if (k == 0) return true;
    std::vector<Vec<S>> brackets;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        Vec<S> b = L.bracket(detail::column(span_cols, i), detail::column(span_cols, j));
        if (max_abs(b) > tol) brackets.push_back(b);
      }
    if (brackets.empty()) return true;
    Mat<S> m(L.dim(), int(brackets.size()));
    for (size_t c = 0; c < brackets.size(); ++c)
      for (int r = 0; r < L.dim(); ++r) m(r, int(c)) = brackets[c][r];
    // Column space of the brackets = next derived term.
    Mat<S> mt = m.transpose();
    int rnk = row_reduce(mt);
    if (rnk >= k) return false;  // not strictly decreasing -> stuck
    Mat<S> next(L.dim(), rnk);
    for (int r = 0; r < rnk; ++r)
      for (int c = 0; c < L.dim(); ++c) next(c, r) = mt(r, c);
    span_cols = next;
  }
  return false;
}

}  // namespace manin
