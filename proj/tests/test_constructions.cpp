#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "manin/catalog_algebras.hpp"
#include "manin/gauss.hpp"
#include "manin/rng.hpp"

using namespace manin;

namespace {
const Rational kZero(0);

/// T*heisenberg with the grading derivation diag(1,1,2,-1,-1,-2).
std::pair<MetricalLieAlgebra<Rational>, Mat<Rational>> graded_cotangent_heisenberg() {
  auto [M, dec] = cotangent_double(heisenberg_algebra<Rational>());
  Mat<Rational> d(6, 6);
  long grades[6] = {1, 1, 2, -1, -1, -2};
  for (int i = 0; i < 6; ++i) d(i, i) = Rational(grades[i]);
  return {M, d};
}
}  // namespace

TEST_CASE("manin double of the ax+b bialgebra, exactly") {
  auto [M, dec] = manin_double(axb_bialgebra<Rational>());
  CHECK(M.dim() == 4);
  CHECK(M.algebra().check_jacobi(kZero).pass);
  CHECK(M.check_invariance(kZero).pass);
  CHECK(check_decomposition(M, dec, kZero).pass);

  const auto& L = M.algebra();
  // [X1,X2] = X2, [Y1,Y2] = Y2, and the mixed table
  CHECK(L.bracket_basis(0, 1) == Vec<Rational>{kZero, Rational(1), kZero, kZero});
  CHECK(L.bracket_basis(2, 3) == Vec<Rational>{kZero, kZero, kZero, Rational(1)});
  CHECK(L.bracket_basis(0, 2) == Vec<Rational>{kZero, kZero, kZero, kZero});
  CHECK(L.bracket_basis(0, 3) == Vec<Rational>{kZero, kZero, kZero, Rational(-1)});
  CHECK(L.bracket_basis(1, 2) == Vec<Rational>{kZero, Rational(1), kZero, kZero});
  CHECK(L.bracket_basis(1, 3) == Vec<Rational>{Rational(-1), kZero, Rational(1), kZero});
}

TEST_CASE("manin double of the su(2) bialgebra reproduces sl(2,C)") {
  auto [M, dec] = manin_double(su2_bialgebra<Rational>());
  auto [Msl, decsl] = sl2c_double();
  CHECK(M.algebra().bracket_terms() == Msl.algebra().bracket_terms());
  CHECK(M.gram() == Msl.gram());
  CHECK(check_decomposition(M, dec, kZero).pass);
}

TEST_CASE("round trip double -> bialgebra -> double") {
  for (int which : {0, 1}) {
    Bialgebra<Rational> bi = which == 0 ? axb_bialgebra<Rational>() : su2_bialgebra<Rational>();
    auto [M, dec] = manin_double(bi);
    Bialgebra<Rational> back = bialgebra_from_double(M, dec);
    CHECK(back.algebra().bracket_terms() == bi.algebra().bracket_terms());
    for (int i = 0; i < bi.algebra().dim(); ++i)
      CHECK((back.cobracket().image(i) - bi.cobracket().image(i)).is_zero());
  }
}

TEST_CASE("a cocycle violation surfaces as a jacobi failure of the double") {
  // b'(e1) = e2 ^ e3 on su(2) is not a cocycle
  CochainMap<Rational> bad(3, 2);
  bad.image(0).add_term(Blade(0b110), Rational(1));
  CHECK_FALSE(check_cocycle(su2_algebra<Rational>(), bad, kZero).pass);
  auto [M, dec] = manin_double(Bialgebra<Rational>(su2_algebra<Rational>(), bad));
  CHECK_FALSE(M.algebra().check_jacobi(kZero).pass);
}

TEST_CASE("cotangent doubles") {
  auto [flat, fdec] = cotangent_double(LieAlgebra<Rational>::abelian(3));
  CHECK(flat.dim() == 6);
  CHECK(flat.algebra().bracket_terms().empty());
  CHECK(flat.check_invariance(kZero).pass);

  auto [taxb, adec] = cotangent_double(axb_algebra<Rational>());
  CHECK(taxb.dim() == 4);
  CHECK(taxb.algebra().check_jacobi(kZero).pass);
  CHECK(taxb.check_invariance(kZero).pass);
  CHECK(is_solvable_subalgebra(taxb.algebra(), Mat<Rational>::identity(4), kZero));

  auto [theis, hdec] = cotangent_double(heisenberg_algebra<Rational>());
  CHECK(theis.algebra().check_jacobi(kZero).pass);
  CHECK(check_decomposition(theis, hdec, kZero).pass);
}

TEST_CASE("double extension") {
  auto osc = oscillator_double_extension();
  CHECK(osc.dim() == 4);
  CHECK(osc.algebra().check_jacobi(kZero).pass);
  CHECK(osc.check_invariance(kZero).pass);
  CHECK_FALSE(osc.is_degenerate(kZero));

  // rho = 0 gives d + g + d* with the cotangent block orthogonal to g
  DoubleExtensionSpec<Rational> spec;
  spec.base = MetricalLieAlgebra<Rational>(su2_algebra<Rational>(), Mat<Rational>::identity(3) * Rational(-2));
  spec.derived = LieAlgebra<Rational>::abelian(1);
  spec.action = {Mat<Rational>(3, 3)};
  auto ext = double_extension(spec, kZero);
  CHECK(ext.dim() == 5);
  CHECK(ext.algebra().check_jacobi(kZero).pass);
  CHECK(ext.check_invariance(kZero).pass);
  for (int i = 0; i < 3; ++i) {
    CHECK(max_abs(ext.algebra().bracket_basis(0, 1 + i)) == kZero);     // [D, X_i] = 0
    CHECK(ext.pair(basis_vector<Rational>(5, 0), basis_vector<Rational>(5, 1 + i)) == kZero);
  }

  // non-skew action is rejected
  DoubleExtensionSpec<Rational> badskew = spec;
  Mat<Rational> notskew(3, 3);
  notskew(0, 0) = Rational(1);
  badskew.action = {notskew};
  CHECK_THROWS(double_extension(badskew, kZero));

  // non-derivation action is rejected
  DoubleExtensionSpec<Rational> badder = spec;
  Mat<Rational> rot3(3, 3);
  rot3(0, 1) = Rational(-1);
  rot3(1, 0) = Rational(1);
  // rotation in the (e1,e2)-plane is skew for -2 Id but not a derivation of su(2)
  badder.action = {rot3};
  CHECK_THROWS(double_extension(badder, kZero));

  auto triv = trivial_extension(osc);
  CHECK(triv.dim() == 5);
  CHECK(triv.algebra().check_jacobi(kZero).pass);
  CHECK(triv.check_invariance(kZero).pass);
}

TEST_CASE("T*-extensions") {
  // w = 0 is exactly the cotangent double
  auto a = axb_algebra<Rational>();
  std::vector<std::vector<Vec<Rational>>> w0(2, std::vector<Vec<Rational>>(2, Vec<Rational>(2, kZero)));
  auto ext0 = tstar_extension(a, w0);
  auto [taxb, dec] = cotangent_double(a);
  CHECK(ext0.algebra().bracket_terms() == taxb.algebra().bracket_terms());
  CHECK(ext0.gram() == taxb.gram());

  // abelian a with a cyclic w stays metrical. Cyclicity plus antisymmetry
  // forces <a_i, w(a_j,a_k)> to be a 3-form, so the smallest nonzero case
  // is the volume form on a 3-dimensional abelian algebra.
  auto ab = LieAlgebra<Rational>::abelian(3);
  std::vector<std::vector<Vec<Rational>>> w(3, std::vector<Vec<Rational>>(3, Vec<Rational>(3, kZero)));
  w[0][1] = {kZero, kZero, Rational(1)};
  w[0][2] = {kZero, Rational(-1), kZero};
  w[1][2] = {Rational(1), kZero, kZero};
  CHECK(check_cyclic_cochain(ab, w, kZero).pass);
  auto ext = tstar_extension(ab, w);
  CHECK(ext.algebra().check_jacobi(kZero).pass);
  CHECK(ext.check_invariance(kZero).pass);
  CHECK_FALSE(ext.is_degenerate(kZero));

  // breaking cyclicity on ax+b breaks invariance but not the construction
  std::vector<std::vector<Vec<Rational>>> wbad(2, std::vector<Vec<Rational>>(2, Vec<Rational>(2, kZero)));
  wbad[0][1] = {Rational(1), Rational(0)};
  CHECK_FALSE(check_cyclic_cochain(a, wbad, kZero).pass);
  auto extbad = tstar_extension(a, wbad);
  CHECK_FALSE(extbad.check_invariance(kZero).pass);
}

TEST_CASE("R-matrix from a Manin decomposition") {
  for (auto* entry : {&axb_double, &sl2c_double}) {
    auto [M, dec] = (*entry)();
    auto r = r_from_manin(M, dec, kZero);
    CHECK(r.skew);
    CHECK(check_ybe(M, r, YbeMode::OneMybe, kZero).pass);
    int half = M.dim() / 2;
    for (int i = 0; i < M.dim(); ++i)
      CHECK(r.op(i, i) == (i < half ? Rational(1) : Rational(-1)));
  }
  auto [theis, hdec] = cotangent_double(heisenberg_algebra<Rational>());
  CHECK(check_ybe(theis, r_from_manin(theis, hdec, kZero), YbeMode::OneMybe, kZero).pass);
}

TEST_CASE("cayley transform") {
  Mat<double> rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  Mat<double> r0 = cayley(rot);
  Mat<double> expect(2, 2);
  expect(0, 1) = 1;
  expect(1, 0) = -1;
  CHECK((r0 - expect).max_abs() < 1e-14);
  CHECK((cayley_inverse(r0) - rot).max_abs() < 1e-14);

  Mat<Rational> minus1 = Mat<Rational>::identity(3) * Rational(-1);
  CHECK(cayley(minus1).max_abs() == kZero);

  Mat<Rational> fixed = Mat<Rational>::identity(2);
  CHECK_THROWS(cayley(fixed));
}

TEST_CASE("R-matrices without unit eigenvalues from exp(tD) on T*g") {
  auto [Mx, dx] = graded_cotangent_heisenberg();
  auto M = to_float(Mx);
  Mat<double> d = to_float(dx);
  CHECK(M.skew_defect(d) < 1e-14);

  Eigen::MatrixXd at = (0.7 * to_eigen(d)).exp();
  // exp(tD) is a g-orthogonal automorphism without fixed points
  Eigen::MatrixXd g = to_eigen(M.gram());
  CHECK((at.transpose() * g * at - g).cwiseAbs().maxCoeff() < 1e-12);
  Mat<double> r = cayley(from_eigen(at));
  auto rm = make_rmatrix(M, r, 1e-12);
  CHECK(rm.skew);
  CHECK(check_ybe(M, rm, YbeMode::OneMybe, 1e-10).pass);
  auto wd = weight_decomposition(r);
  CHECK(wd.find(1.0, 1e-6) < 0);
  CHECK(wd.find(-1.0, 1e-6) < 0);

  // gauss_from_r sees a pure middle block with the automorphism recovered
  auto gr = gauss_from_r(M, rm);
  CHECK(gr.decomposition.plus.cols() == 0);
  CHECK(gr.decomposition.minus.cols() == 0);
  CHECK(gr.decomposition.zero.cols() == 6);
  CHECK(gr.middle_orthogonal);
  CHECK(gr.middle_fixed_point_free);
  CHECK(gr.middle_solvable);
}

TEST_CASE("gauss decomposition from an R-matrix and back") {
  auto Mx = axb_double().first;
  auto M = to_float(Mx);
  auto r = r_from_manin(to_float(axb_double().first), Decomposition<double>::from_indices(4, {0, 1}, {2, 3}),
                        1e-12);
  auto gr = gauss_from_r(M, r);
  CHECK(gr.decomposition.zero.cols() == 0);
  CHECK(gr.decomposition.plus.cols() == 2);
  CHECK(check_decomposition(M, gr.decomposition, 1e-10).pass);
  auto r2 = r_from_gauss(M, gr.decomposition, Mat<double>(0, 0), 1e-12);
  CHECK((r2.op - r.op).max_abs() < 1e-12);
}

TEST_CASE("decomposition from a skew derivation") {
  // nilpotent derivation: trivial decomposition
  auto [Mh, hdec] = cotangent_double(heisenberg_algebra<Rational>());
  auto Mhf = to_float(Mh);
  Mat<double> adp = Mhf.algebra().ad(basis_vector<double>(6, 0));
  auto trivial = decomposition_from_derivation(Mhf, adp);
  CHECK(trivial.zero.cols() == 6);
  CHECK(trivial.plus.cols() == 0);

  // grading derivation on T*heisenberg: no zero weights, a Manin splitting
  auto [Mx, dx] = graded_cotangent_heisenberg();
  auto M = to_float(Mx);
  auto manin = decomposition_from_derivation(M, to_float(dx));
  CHECK(manin.is_manin());
  CHECK(manin.plus.cols() == 3);
  CHECK(check_decomposition(M, manin, 1e-10).pass);
  CHECK(check_ybe(M, r_from_manin(M, manin, 1e-12), YbeMode::OneMybe, 1e-10).pass);

  // ad(X1) on T*(ax+b): three-block Gauss decomposition (1 | 2 | 1)
  auto Mt = to_float(cotangent_double(axb_algebra<Rational>()).first);
  Mat<double> adx1 = Mt.algebra().ad(basis_vector<double>(4, 0));
  auto gauss = decomposition_from_derivation(Mt, adx1);
  CHECK(gauss.plus.cols() == 1);
  CHECK(gauss.zero.cols() == 2);
  CHECK(gauss.minus.cols() == 1);
  CHECK(check_decomposition(Mt, gauss, 1e-10).pass);

  // the skew-derivation pairing identity g((D-mu)^l X, Y) = g(X, (-D-mu)^l Y)
  Rng rng(5);
  for (int l = 1; l <= 3; ++l)
    for (int t = 0; t < 10; ++t) {
      double mu = rng.uniform(-2, 2);
      Vec<double> x(4), y(4);
      for (auto& v : x) v = rng.uniform(-1, 1);
      for (auto& v : y) v = rng.uniform(-1, 1);
      Mat<double> dmu = adx1 - Mat<double>::identity(4) * mu;
      Mat<double> dmun = -adx1 - Mat<double>::identity(4) * mu;
      Mat<double> pl = Mat<double>::identity(4), pr = Mat<double>::identity(4);
      for (int k = 0; k < l; ++k) {
        pl = pl * dmu;
        pr = pr * dmun;
      }
      CHECK(std::abs(Mt.pair(pl * x, y) - Mt.pair(x, pr * y)) < 1e-10);
    }

  // a non-derivation is refused
  Mat<double> notder(4, 4);
  notder(0, 2) = 1;
  notder(2, 0) = -1;
  CHECK_THROWS_AS(decomposition_from_derivation(Mt, notder), DerivationDecompositionError);
}

TEST_CASE("middle-block extensions of R-matrices") {
  // commutative middle block accepts any skew R0 (here eigenvalues +-2)
  auto Mt = to_float(cotangent_double(axb_algebra<Rational>()).first);
  Mat<double> adx1 = Mt.algebra().ad(basis_vector<double>(4, 0));
  auto gauss = decomposition_from_derivation(Mt, adx1);
  // middle block is commutative here
  for (int i = 0; i < gauss.zero.cols(); ++i)
    for (int j = 0; j < gauss.zero.cols(); ++j) {
      Vec<double> zi(4), zj(4);
      for (int r = 0; r < 4; ++r) {
        zi[r] = gauss.zero(r, i);
        zj[r] = gauss.zero(r, j);
      }
      CHECK(max_abs(Mt.algebra().bracket(zi, zj)) < 1e-12);
    }
  Mat<double> gz(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec<double> zi(4), zj(4);
      for (int r = 0; r < 4; ++r) {
        zi[r] = gauss.zero(r, i);
        zj[r] = gauss.zero(r, j);
      }
      gz(i, j) = Mt.pair(zi, zj);
    }
  // skew R0 for the restricted pairing, no +-1 eigenvalues
  Mat<double> s(2, 2);
  s(0, 1) = 2.0;
  s(1, 0) = -2.0;
  Mat<double> r0 = inverse(gz) * s;
  auto r = r_from_gauss(Mt, gauss, r0, 1e-9);
  CHECK(check_ybe(Mt, r, YbeMode::OneMybe, 1e-9).pass);

  // Cayley R0 of a fixed-point-free orthogonal automorphism of the middle
  Eigen::MatrixXd a0 = (1.3 * to_eigen(inverse(gz) * s)).exp();
  Mat<double> r0c = cayley(from_eigen(a0));
  auto rc = r_from_gauss(Mt, gauss, r0c, 1e-9);
  CHECK(check_ybe(Mt, rc, YbeMode::OneMybe, 1e-9).pass);

  // R0 with eigenvalue +-1 is refused
  Mat<double> bad = Mat<double>::identity(2);
  CHECK_THROWS(r_from_gauss(Mt, gauss, bad, 1e-9));

  // empty middle block reduces to r_from_manin
  auto [Mx, dx] = graded_cotangent_heisenberg();
  auto M = to_float(Mx);
  auto manin = decomposition_from_derivation(M, to_float(dx));
  auto ra = r_from_gauss(M, manin, Mat<double>(0, 0), 1e-9);
  auto rb = r_from_manin(M, manin, 1e-9);
  CHECK((ra.op - rb.op).max_abs() < 1e-12);
}

TEST_CASE("double-of-double witness") {
  // exact on the catalog doubles
  for (auto* entry : {&axb_double, &sl2c_double}) {
    auto [M, dec] = (*entry)();
    auto r = r_from_manin(M, dec, kZero);
    CHECK(theorem222_witness(M, r, kZero).pass);
  }
  // R = 0 on an abelian metrical algebra: graph {(X,-X)} complements the diagonal
  MetricalLieAlgebra<Rational> flat(LieAlgebra<Rational>::abelian(2), Mat<Rational>::identity(2));
  RMatrix<Rational> rz{Mat<Rational>(2, 2), true};
  CHECK(theorem222_witness(flat, rz, kZero).pass);

  // Cayley R-matrix without +-1 eigenvalues
  auto [Mx, dx] = graded_cotangent_heisenberg();
  auto M = to_float(Mx);
  Eigen::MatrixXd at = (0.7 * to_eigen(to_float(dx))).exp();
  auto rm = make_rmatrix(M, cayley(from_eigen(at)), 1e-12);
  CHECK(theorem222_witness(M, rm, 1e-10).pass);
}

TEST_CASE("constructed algebras always satisfy the metrical axioms") {
  for (const auto& [name, M] : catalog_metrical_algebras()) {
    INFO(name);
    CHECK(M.algebra().check_jacobi(kZero).pass);
    CHECK(M.check_invariance(kZero).pass);
  }
}
