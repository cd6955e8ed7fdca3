#pragma once

#include "manin/constructions.hpp"
#include "manin/weights.hpp"

namespace manin {

namespace detail {

/// Real kernel basis of p(R) where p runs over the given eigenvalue
/// clusters, conjugate pairs combined into real quadratic factors.
inline Mat<double> real_invariant_subspace(const Mat<double>& op,
                                           const std::vector<std::pair<std::complex<double>, int>>& clusters) {
  int n = op.rows();
  Eigen::MatrixXd a = to_eigen(op);
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  std::vector<bool> used(clusters.size(), false);
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (used[i]) continue;
    auto [lambda, mult] = clusters[i];
    if (std::abs(lambda.imag()) < 1e-9) {
      Eigen::MatrixXd f = a - lambda.real() * Eigen::MatrixXd::Identity(n, n);
      for (int k = 0; k < mult; ++k) p = p * f;
    } else {
      // Find the conjugate partner and fold both into (R^2 - 2 Re R + |l|^2).
      for (size_t j = i + 1; j < clusters.size(); ++j)
        if (!used[j] && std::abs(clusters[j].first - std::conj(lambda)) < 1e-6) used[j] = true;
      Eigen::MatrixXd f =
          a * a - 2.0 * lambda.real() * a + std::norm(lambda) * Eigen::MatrixXd::Identity(n, n);
      for (int k = 0; k < mult; ++k) p = p * f;
    }
    used[i] = true;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(p);
  lu.setThreshold(1e-9);
  return from_eigen(lu.kernel());
}

}  // namespace detail

struct GaussFromRmatrix {
  Decomposition<double> decomposition;
  Mat<double> middle_automorphism;  // A = (R+1)(R-1)^{-1} on the middle block, in block coordinates
  bool middle_orthogonal = false;
  bool middle_fixed_point_free = false;
  bool middle_solvable = false;
};

/// Gauss decomposition induced by an R-matrix: +-1 weight spaces as the
/// outer blocks, everything else in the middle, with the Cayley-transformed
/// automorphism of the middle block.
inline GaussFromRmatrix gauss_from_r(const MetricalLieAlgebra<double>& M, const RMatrix<double>& r,
                                     double cluster_eps = 1e-7) {
  int n = M.dim();
  WeightDecomposition wd = weight_decomposition(r.op, cluster_eps);
  std::vector<std::pair<std::complex<double>, int>> plus_c, minus_c, zero_c;
  for (const auto& s : wd.spaces) {
    auto entry = std::make_pair(s.weight, int(s.basis.cols()));
    if (std::abs(s.weight - 1.0) <= 1e-6)
      plus_c.push_back(entry);
    else if (std::abs(s.weight + 1.0) <= 1e-6)
      minus_c.push_back(entry);
    else
      zero_c.push_back(entry);
  }
  GaussFromRmatrix out;
  out.decomposition.plus = plus_c.empty() ? Mat<double>(n, 0) : detail::real_invariant_subspace(r.op, plus_c);
  out.decomposition.minus = minus_c.empty() ? Mat<double>(n, 0) : detail::real_invariant_subspace(r.op, minus_c);
  out.decomposition.zero = zero_c.empty() ? Mat<double>(n, 0) : detail::real_invariant_subspace(r.op, zero_c);
  if (out.decomposition.full_basis().cols() != n)
    throw std::runtime_error("gauss_from_r: weight blocks do not span");

  int nz = out.decomposition.zero.cols();
  if (nz > 0) {
    Eigen::MatrixXd z = to_eigen(out.decomposition.zero);
    Eigen::MatrixXd rop = to_eigen(r.op);
    auto coords = [&](const Eigen::MatrixXd& v) {
      return (z.transpose() * z).ldlt().solve(z.transpose() * v).eval();
    };
    Eigen::MatrixXd rp = coords(rop * z + z);
    Eigen::MatrixXd rm = coords(rop * z - z);
    Eigen::MatrixXd a = rp * rm.inverse();
    out.middle_automorphism = from_eigen(a);
    Eigen::MatrixXd gz = z.transpose() * to_eigen(M.gram()) * z;
    out.middle_orthogonal = (a.transpose() * gz * a - gz).cwiseAbs().maxCoeff() < 1e-8;
    out.middle_fixed_point_free =
        std::abs((a - Eigen::MatrixXd::Identity(nz, nz)).determinant()) > 1e-10;
    out.middle_solvable = is_solvable_subalgebra(M.algebra(), out.decomposition.zero, 1e-9);
  } else {
    out.middle_automorphism = Mat<double>(0, 0);
    out.middle_orthogonal = true;
    out.middle_fixed_point_free = true;
    out.middle_solvable = true;
  }
  return out;
}

struct DerivationDecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gauss decomposition attached to a g-skew derivation D: the middle block
/// is the generalized 0-weight space, the outer blocks collect the weights
/// in the chosen half-plane and their mirrors. Purely imaginary weights
/// would straddle the real outer blocks and are rejected.
inline Decomposition<double> decomposition_from_derivation(const MetricalLieAlgebra<double>& M,
                                                           const Mat<double>& d, double eps = 1e-9,
                                                           double cluster_eps = 1e-7) {
  const auto& L = M.algebra();
  int n = M.dim();
  if (M.skew_defect(d) > 1e-9) throw DerivationDecompositionError("derivation is not g-skew");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<double> lhs = d * L.bracket_basis(i, j);
      Vec<double> rhs = L.bracket(d * basis_vector<double>(n, i), basis_vector<double>(n, j)) +
                        L.bracket(basis_vector<double>(n, i), d * basis_vector<double>(n, j));
      if (max_abs(lhs - rhs) > 1e-9) throw DerivationDecompositionError("operator is not a derivation");
    }
  WeightDecomposition wd = weight_decomposition(d, cluster_eps);
  std::vector<std::pair<std::complex<double>, int>> plus_c, minus_c, zero_c;
  for (const auto& s : wd.spaces) {
    auto entry = std::make_pair(s.weight, int(s.basis.cols()));
    if (std::abs(s.weight) <= eps)
      zero_c.push_back(entry);
    else if (std::abs(s.weight.real()) <= eps)
      throw DerivationDecompositionError("purely imaginary weight: no real splitting");
    else if (s.weight.real() > 0.0)
      plus_c.push_back(entry);
    else
      minus_c.push_back(entry);
  }
  // The mirror requirement: -lambda must occur with matching multiplicity
  // (g-skewness forces it; this guards numerical surprises).
  for (const auto& [la, m] : plus_c) {
    bool found = false;
    for (const auto& [mu, mm] : minus_c) found = found || (std::abs(mu + la) < 1e-6 && mm == m);
    if (!found) throw DerivationDecompositionError("weights are not mirror-symmetric");
  }
  Decomposition<double> dec;
  dec.plus = plus_c.empty() ? Mat<double>(n, 0) : detail::real_invariant_subspace(d, plus_c);
  dec.minus = minus_c.empty() ? Mat<double>(n, 0) : detail::real_invariant_subspace(d, minus_c);
  dec.zero = zero_c.empty() ? Mat<double>(n, 0) : detail::real_invariant_subspace(d, zero_c);
  if (dec.full_basis().cols() != n) throw DerivationDecompositionError("weight blocks do not span");
  return dec;
}

}  // namespace manin
