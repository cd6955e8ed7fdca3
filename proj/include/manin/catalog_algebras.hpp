#pragma once

#include <array>

#include "manin/constructions.hpp"

namespace manin {

/// Exact complex rational, only used to derive catalog structure constants
/// from matrix models; general complex scalars stay in the float tower.
struct CRat {
  Rational re, im;
  CRat() : re(0), im(0) {}
  CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
  CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
  CRat operator*(const CRat& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
};

using CMat2 = std::array<std::array<CRat, 2>, 2>;

inline CMat2 cmul(const CMat2& a, const CMat2& b) {
  CMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

inline CMat2 csub(const CMat2& a, const CMat2& b) {
  CMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}

inline CMat2 commutator(const CMat2& a, const CMat2& b) { return csub(cmul(a, b), cmul(b, a)); }

/// Lie algebra spanned (over the rationals) by complex matrices; structure
/// constants are obtained by exact linear solves in the flattened real
/// coordinates. Throws if the span is not bracket-closed.
template <size_t N>
LieAlgebra<Rational> algebra_from_matrices(const std::array<CMat2, N>& basis,
                                           const std::vector<std::string>& labels) {
  auto flatten = [](const CMat2& m) {
    Vec<Rational> v(8, Rational(0));
    int p = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        v[p++] = m[i][j].re;
        v[p++] = m[i][j].im;
      }
    return v;
  };
  Mat<Rational> span(8, int(N));
  for (size_t c = 0; c < N; ++c) {
    Vec<Rational> f = flatten(basis[c]);
    for (int r = 0; r < 8; ++r) span(r, int(c)) = f[r];
  }
  auto solve_in_span = [&](const CMat2& target) {
    const int nb = int(N);
    Mat<Rational> work(8, nb + 1);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < nb; ++c) work(r, c) = span(r, c);
    Vec<Rational> t = flatten(target);
    for (int r = 0; r < 8; ++r) work(r, nb) = t[r];
    int rk = row_reduce(work);
    Vec<Rational> x(N, Rational(0));
    // Read the solution off the reduced form; inconsistency = rank grew.
    Mat<Rational> span_only = span;
    if (rk != row_reduce(span_only)) throw std::domain_error("algebra_from_matrices: bracket leaves the span");
    for (int row = 0; row < rk; ++row) {
      int lead = -1;
      for (int c = 0; c < nb; ++c)
        if (!ScalarTraits<Rational>::is_zero(work(row, c))) {
          lead = c;
          break;
        }
      if (lead >= 0) x[lead] = work(row, nb);
    }
    return x;
  };
  LieAlgebra<Rational> L(static_cast<int>(N), labels);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j) {
      Vec<Rational> c = solve_in_span(commutator(basis[i], basis[j]));
      for (size_t k = 0; k < N; ++k)
        if (c[k] != 0) L.add_bracket_term(int(i), int(j), int(k), c[k]);
    }
  return L;
}

// ---------------------------------------------------------------------------
// Catalog basis matrices.

/// su(2) basis: e1 = diag(i,-i)/2, e2 = [[0,1],[-1,0]]/2, e3 = [[0,i],[i,0]]/2.
inline std::array<CMat2, 3> su2_matrices() {
  Rational h(1, 2);
  CMat2 e1{{{CRat(0, h), CRat(0, 0)}, {CRat(0, 0), CRat(0, -h)}}};
  CMat2 e2{{{CRat(0, 0), CRat(h, 0)}, {CRat(-h, 0), CRat(0, 0)}}};
  CMat2 e3{{{CRat(0, 0), CRat(0, h)}, {CRat(0, h), CRat(0, 0)}}};
  return {e1, e2, e3};
}

/// sb(2,C) basis dual to su(2) under 2 Im tr(AB).
inline std::array<CMat2, 3> sb2_matrices() {
  Rational h(1, 2);
  CMat2 f1{{{CRat(h, 0), CRat(0, 0)}, {CRat(0, 0), CRat(-h, 0)}}};
  CMat2 f2{{{CRat(0, 0), CRat(0, -1)}, {CRat(0, 0), CRat(0, 0)}}};
  CMat2 f3{{{CRat(0, 0), CRat(1, 0)}, {CRat(0, 0), CRat(0, 0)}}};
  return {f1, f2, f3};
}

/// gamma(A, B) = 2 Im tr(AB), exactly.
inline Rational sl2c_pairing(const CMat2& a, const CMat2& b) {
  CMat2 p = cmul(a, b);
  return Rational(2) * (p[0][0].im + p[1][1].im);
}

// ---------------------------------------------------------------------------
// Catalog algebras (exact scalar tower; convert with to_float for analysis).

template <class S>
LieAlgebra<S> su2_algebra() {
  LieAlgebra<S> L(3, {"e1", "e2", "e3"});
  L.add_bracket_term(0, 1, 2, ScalarTraits<S>::one());
  L.add_bracket_term(1, 2, 0, ScalarTraits<S>::one());
  L.add_bracket_term(2, 0, 1, ScalarTraits<S>::one());
  return L;
}

/// The ax+b algebra: [X1, X2] = X2.
template <class S>
LieAlgebra<S> axb_algebra() {
  LieAlgebra<S> L(2, {"X1", "X2"});
  L.add_bracket_term(0, 1, 1, ScalarTraits<S>::one());
  return L;
}

/// Heisenberg algebra [p, q] = z, positively graded by deg(p,q) = 1, deg z = 2.
template <class S>
LieAlgebra<S> heisenberg_algebra() {
  LieAlgebra<S> L(3, {"p", "q", "z"});
  L.add_bracket_term(0, 1, 2, ScalarTraits<S>::one());
  return L;
}

/// ax+b with cobracket b'(X1) = 0, b'(X2) = X1 ^ X2.
template <class S>
Bialgebra<S> axb_bialgebra() {
  CochainMap<S> cob(2, 2);
  cob.image(1).add_term((Blade(1) << 0) | (Blade(1) << 1), ScalarTraits<S>::one());
  return Bialgebra<S>(axb_algebra<S>(), cob);
}

/// su(2) with cobracket b'(e1) = 0, b'(e2) = e1 ^ e2, b'(e3) = e1 ^ e3.
template <class S>
Bialgebra<S> su2_bialgebra() {
  CochainMap<S> cob(3, 2);
  cob.image(1).add_term((Blade(1) << 0) | (Blade(1) << 1), ScalarTraits<S>::one());
  cob.image(2).add_term((Blade(1) << 0) | (Blade(1) << 2), ScalarTraits<S>::one());
  return Bialgebra<S>(su2_algebra<S>(), cob);
}

/// The 6-dimensional real double su(2) + sb(2,C) = sl(2,C), structure
/// constants derived exactly from the matrix models, metric 2 Im tr(AB).
inline std::pair<MetricalLieAlgebra<Rational>, Decomposition<Rational>> sl2c_double() {
  auto e = su2_matrices();
  auto f = sb2_matrices();
  std::array<CMat2, 6> basis{e[0], e[1], e[2], f[0], f[1], f[2]};
  LieAlgebra<Rational> L =
      algebra_from_matrices(basis, {"e1", "e2", "e3", "e1*", "e2*", "e3*"});
  Mat<Rational> gram(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) gram(i, j) = sl2c_pairing(basis[size_t(i)], basis[size_t(j)]);
  return {MetricalLieAlgebra<Rational>(L, gram),
          Decomposition<Rational>::from_indices(6, {0, 1, 2}, {3, 4, 5})};
}

/// The 4-dimensional ax+b double (abstractly gl(2,R)).
inline std::pair<MetricalLieAlgebra<Rational>, Decomposition<Rational>> axb_double() {
  return manin_double(axb_bialgebra<Rational>());
}

/// Oscillator-type double extension: 1-dim d acting on the flat plane by
/// rotations.
inline MetricalLieAlgebra<Rational> oscillator_double_extension() {
  DoubleExtensionSpec<Rational> spec;
  spec.base = MetricalLieAlgebra<Rational>(LieAlgebra<Rational>::abelian(2), Mat<Rational>::identity(2));
  spec.derived = LieAlgebra<Rational>::abelian(1);
  Mat<Rational> rot(2, 2);
  rot(0, 1) = Rational(-1);
  rot(1, 0) = Rational(1);
  spec.action = {rot};
  return double_extension(spec, Rational(0));
}

/// Every exact catalog metrical algebra, used by the property sweeps.
inline std::vector<std::pair<std::string, MetricalLieAlgebra<Rational>>> catalog_metrical_algebras() {
  std::vector<std::pair<std::string, MetricalLieAlgebra<Rational>>> out;
  out.emplace_back("axb_double", axb_double().first);
  out.emplace_back("sl2c_double", sl2c_double().first);
  out.emplace_back("tstar_heisenberg", cotangent_double(heisenberg_algebra<Rational>()).first);
  out.emplace_back("oscillator", oscillator_double_extension());
  return out;
}

}  // namespace manin
