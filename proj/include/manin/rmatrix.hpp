#pragma once

#include <array>
#include <utility>

#include "manin/bialgebra.hpp"

namespace manin {

/// Endomorphism of a metrical Lie algebra playing the R-matrix role.
/// Skewness with respect to the metric is recorded, not enforced: non-skew
/// solutions (from non-orthogonal automorphisms) are legal but flagged.
template <class S>
struct RMatrix {
  Mat<S> op;
  bool skew = false;
};

template <class S>
RMatrix<S> make_rmatrix(const MetricalLieAlgebra<S>& M, Mat<S> op, const S& tol) {
  RMatrix<S> r{std::move(op), false};
  r.skew = !(M.skew_defect(r.op) > tol);
  return r;
}

/// R = C o g for a bivector C; mutually inverse with c_from_r.
template <class S>
RMatrix<S> r_from_c(const MetricalLieAlgebra<S>& M, const Multivector<S>& c, const S& tol) {
  if (c.degree() != 2) throw std::invalid_argument("r_from_c: bivector expected");
  int n = M.dim();
  Mat<S> cmat(n, n);
  for (const auto& [b, v] : c.terms()) {
    auto idx = detail::blade_indices(b);
    cmat(idx[0], idx[1]) += v;
    cmat(idx[1], idx[0]) -= v;
  }
  return make_rmatrix(M, cmat * M.gram(), tol);
}

template <class S>
Multivector<S> c_from_r(const MetricalLieAlgebra<S>& M, const RMatrix<S>& r) {
  Mat<S> cmat = r.op * inverse(M.gram());
  Multivector<S> c(2);
  for (int i = 0; i < M.dim(); ++i)
    for (int j = i + 1; j < M.dim(); ++j) {
      // The skew part; exact inverse of r_from_c when R is g-skew.
      S half = ScalarTraits<S>::one() / ScalarTraits<S>::from_int(2);
      c.add_term((Blade(1) << i) | (Blade(1) << j), (cmat(i, j) - cmat(j, i)) * half);
    }
  return c;
}

/// b_R(X,Y) = [RX,Y] + [X,RY].
template <class S>
Vec<S> b_r_bracket(const MetricalLieAlgebra<S>& M, const RMatrix<S>& r, const Vec<S>& x, const Vec<S>& y) {
  const auto& L = M.algebra();
  return L.bracket(r.op * x, y) + L.bracket(x, r.op * y);
}

/// B_R(X,Y) = [RX,RY] - R([RX,Y] + [X,RY]).
template <class S>
Vec<S> big_b_r(const MetricalLieAlgebra<S>& M, const RMatrix<S>& r, const Vec<S>& x, const Vec<S>& y) {
  const auto& L = M.algebra();
  return L.bracket(r.op * x, r.op * y) - r.op * b_r_bracket(M, r, x, y);
}

enum class YbeMode { Ybe, OneMybe, CMybe, IMybe, Invariance };

inline const char* ybe_mode_name(YbeMode m) {
  switch (m) {
    case YbeMode::Ybe: return "YBE";
    case YbeMode::OneMybe: return "1-mYBE";
    case YbeMode::CMybe: return "c-mYBE";
    case YbeMode::IMybe: return "I-mYBE";
    case YbeMode::Invariance: return "invariance";
  }
  return "?";
}

/// Residual of the selected Yang-Baxter-type condition over basis pairs.
/// CMybe takes the constant in `c_const`; IMybe the invariant operator in
/// `i_op`. Invariance checks the ad-invariance defect of B_R.
template <class S>
CheckReport<S> check_ybe(const MetricalLieAlgebra<S>& M, const RMatrix<S>& r, YbeMode mode, const S& tol,
                         const S& c_const = ScalarTraits<S>::one(), const Mat<S>* i_op = nullptr) {
  CheckReport<S> rep;
  rep.check = ybe_mode_name(mode);
  const auto& L = M.algebra();
  int n = M.dim();
  if (mode == YbeMode::Invariance) {
    for (int k = 0; k < n; ++k) {
      Vec<S> xk = basis_vector<S>(n, k);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j);
          Vec<S> defect = L.bracket(xk, big_b_r(M, r, xi, xj)) - big_b_r(M, r, L.bracket_basis(k, i), xj) -
                          big_b_r(M, r, xi, L.bracket_basis(k, j));
          rep.absorb(max_abs(defect));
        }
    }
    rep.finish(tol);
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j);
      Vec<S> res = big_b_r(M, r, xi, xj);
      Vec<S> br = L.bracket_basis(i, j);
      switch (mode) {
        case YbeMode::Ybe: break;
        case YbeMode::OneMybe: res = res + br; break;
        case YbeMode::CMybe: res = res + c_const * br; break;
        case YbeMode::IMybe: res = res + (*i_op) * br; break;
        default: break;
      }
      rep.absorb(max_abs(res));
    }
  rep.finish(tol);
  return rep;
}

/// The five equivalent conditions on an exact cobracket candidate: the
/// checks must all pass or all fail together.
template <class S>
struct EquivalenceSuite {
  std::array<CheckReport<S>, 5> conditions;
  bool all_agree = false;
  bool all_pass = false;
};

template <class S>
EquivalenceSuite<S> corollary29_suite(const MetricalLieAlgebra<S>& M, const Multivector<S>& c, const S& tol) {
  EquivalenceSuite<S> suite;
  const auto& L = M.algebra();
  RMatrix<S> r = r_from_c(M, c, tol);
  // (1) the dual map of dC is a Lie bracket on g*.
  suite.conditions[0] = Bialgebra<S>(L, coboundary(L, c)).dual_algebra().check_jacobi(tol);
  suite.conditions[0].check = "dual-bracket-jacobi";
  // (2) b_R satisfies Jacobi.
  CheckReport<S> jac;
  jac.check = "b_R-jacobi";
  int n = M.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j), xk = basis_vector<S>(n, k);
        Vec<S> s = b_r_bracket(M, r, b_r_bracket(M, r, xi, xj), xk) +
                   b_r_bracket(M, r, b_r_bracket(M, r, xj, xk), xi) +
                   b_r_bracket(M, r, b_r_bracket(M, r, xk, xi), xj);
        jac.absorb(max_abs(s));
      }
  jac.finish(tol);
  suite.conditions[1] = jac;
  // (3) [C,C] is ad-invariant.
  suite.conditions[2] = check_ad_invariant(L, schouten(L, c, c), tol);
  suite.conditions[2].check = "schouten-invariant";
  // (4) B_R is ad-invariant.
  suite.conditions[3] = check_ybe(M, r, YbeMode::Invariance, tol);
  // (5) cyclic sum of [X, B_R(Y,Z)] vanishes.
  CheckReport<S> cyc;
  cyc.check = "cyclic-sum";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j), xk = basis_vector<S>(n, k);
        Vec<S> s = L.bracket(xi, big_b_r(M, r, xj, xk)) + L.bracket(xj, big_b_r(M, r, xk, xi)) +
                   L.bracket(xk, big_b_r(M, r, xi, xj));
        cyc.absorb(max_abs(s));
      }
  cyc.finish(tol);
  suite.conditions[4] = cyc;

  suite.all_pass = true;
  suite.all_agree = true;
  for (const auto& c5 : suite.conditions) suite.all_pass = suite.all_pass && c5.pass;
  for (const auto& c5 : suite.conditions) suite.all_agree = suite.all_agree && (c5.pass == suite.conditions[0].pass);
  return suite;
}

/// The four equivalent characterizations of the R-matrix equation for a
/// g-skew endomorphism.
template <class S>
struct RmatrixLemmaSuite {
  std::array<CheckReport<S>, 4> conditions;
  bool all_agree = false;
  bool all_pass = false;
};

template <class S>
RmatrixLemmaSuite<S> lemma210_suite(const MetricalLieAlgebra<S>& M, const RMatrix<S>& r, const S& tol) {
  RmatrixLemmaSuite<S> suite;
  const auto& L = M.algebra();
  int n = M.dim();
  Mat<S> rp = r.op + Mat<S>::identity(n);
  Mat<S> rm = r.op - Mat<S>::identity(n);

  suite.conditions[0] = check_ybe(M, r, YbeMode::OneMybe, tol);

  CheckReport<S> inter;
  inter.check = "plus-minus-intertwine";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j);
      Vec<S> lhs = rp * L.bracket(rm * xi, rm * xj);
      Vec<S> rhs = rm * L.bracket(rp * xi, rp * xj);
      inter.absorb(max_abs(lhs - rhs));
    }
  inter.finish(tol);
  suite.conditions[1] = inter;

  // Sampled two-parameter family; the identity is polynomial of low degree
  // in (lambda, mu), so a handful of sample pairs certifies it.
  CheckReport<S> fam;
  fam.check = "two-parameter-family";
  const S h = ScalarTraits<S>::one() / ScalarTraits<S>::from_int(2);
  const S t = ScalarTraits<S>::one() / ScalarTraits<S>::from_int(3);
  std::vector<std::pair<S, S>> samples = {{ScalarTraits<S>::zero(), ScalarTraits<S>::zero()},
                                          {ScalarTraits<S>::one(), ScalarTraits<S>::from_int(-1)},
                                          {ScalarTraits<S>::one(), ScalarTraits<S>::from_int(2)},
                                          {ScalarTraits<S>::from_int(-2), ScalarTraits<S>::from_int(3)},
                                          {h, -t}};
  for (const auto& [la, mu] : samples) {
    Mat<S> rl = r.op - Mat<S>::identity(n) * la;
    Mat<S> rmu = r.op - Mat<S>::identity(n) * mu;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j);
        Vec<S> br = L.bracket_basis(i, j);
        Vec<S> res = (la + mu) * (r.op * br) - (ScalarTraits<S>::one() + la * mu) * br -
                     L.bracket(rl * xi, rmu * xj) + rl * L.bracket(xi, rmu * xj) + rmu * L.bracket(rl * xi, xj);
        fam.absorb(max_abs(res));
      }
  }
  fam.finish(tol);
  suite.conditions[2] = fam;

  CheckReport<S> hom;
  hom.check = "b_R-jacobi-and-homomorphisms";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> xi = basis_vector<S>(n, i), xj = basis_vector<S>(n, j);
      Vec<S> bij = b_r_bracket(M, r, xi, xj);
      hom.absorb(max_abs(rp * bij - L.bracket(rp * xi, rp * xj)));
      hom.absorb(max_abs(rm * bij - L.bracket(rm * xi, rm * xj)));
      for (int k = j + 1; k < n; ++k) {
        Vec<S> xk = basis_vector<S>(n, k);
        Vec<S> s = b_r_bracket(M, r, bij, xk) + b_r_bracket(M, r, b_r_bracket(M, r, xj, xk), xi) +
                   b_r_bracket(M, r, b_r_bracket(M, r, xk, xi), xj);
        hom.absorb(max_abs(s));
      }
    }
  hom.finish(tol);
  suite.conditions[3] = hom;

  suite.all_pass = true;
  suite.all_agree = true;
  for (const auto& c : suite.conditions) suite.all_pass = suite.all_pass && c.pass;
  for (const auto& c : suite.conditions) suite.all_agree = suite.all_agree && (c.pass == suite.conditions[0].pass);
  return suite;
}

/// The two halves of the bivector/operator dictionary: the dual bracket of
/// dC corresponds to b_R, and the Schouten square [C,C] to 2 B_R.
template <class S>
CheckReport<S> prop28_dictionary_check(const MetricalLieAlgebra<S>& M, const Multivector<S>& c, const S& tol) {
  CheckReport<S> rep;
  rep.check = "bivector-operator-dictionary";
  const auto& L = M.algebra();
  int n = M.dim();
  RMatrix<S> r = r_from_c(M, c, tol);
  CochainMap<S> bp = coboundary(L, c);
  // g^{-1}(b'(alpha,beta)) = [g^{-1}alpha, g^{-1}beta]_R for basis covectors
  // alpha = g X_i, beta = g X_j.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> alpha = M.lower(basis_vector<S>(n, i));
      Vec<S> beta = M.lower(basis_vector<S>(n, j));
      Vec<S> dual_bracket(n, ScalarTraits<S>::zero());
      for (int k = 0; k < n; ++k) dual_bracket[k] = pair_with_covectors(bp.image(k), {alpha, beta});
      Vec<S> lhs = M.raise(dual_bracket);
      Vec<S> rhs = b_r_bracket(M, r, basis_vector<S>(n, i), basis_vector<S>(n, j));
      rep.absorb(max_abs(lhs - rhs));
    }
  // <[C,C], alpha ^ gU ^ gV> = 2 <B_R(U,V), alpha>.
  Multivector<S> cc = schouten(L, c, c);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> gu = M.lower(basis_vector<S>(n, i));
      Vec<S> gv = M.lower(basis_vector<S>(n, j));
      Vec<S> br = big_b_r(M, r, basis_vector<S>(n, i), basis_vector<S>(n, j));
      for (int k = 0; k < n; ++k) {
        S lhs = pair_with_covectors(cc, {basis_vector<S>(n, k), gu, gv});
        S rhs = ScalarTraits<S>::from_int(2) * br[k];
        rep.absorb(ScalarTraits<S>::abs(lhs - rhs));
      }
    }
  rep.finish(tol);
  return rep;
}

}  // namespace manin
