#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

#include "manin/metric.hpp"

namespace manin {

struct ClusteringAmbiguity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightPole : std::domain_error {
  using std::domain_error::domain_error;
};

/// One generalized eigenspace of an endomorphism: the weight and a basis of
/// ker (R - lambda)^N, as columns.
struct WeightSpace {
  std::complex<double> weight;
  Eigen::MatrixXcd basis;
};

struct WeightDecomposition {
  std::vector<WeightSpace> spaces;

  int total_dim() const {
    int d = 0;
    for (const auto& s : spaces) d += int(s.basis.cols());
    return d;
  }
  /// Index of the weight space matching lambda within eps, or -1.
  int find(std::complex<double> lambda, double eps) const {
    for (size_t i = 0; i < spaces.size(); ++i)
      if (std::abs(spaces[i].weight - lambda) <= eps) return int(i);
    return -1;
  }
};

/// lambda o mu = (1 + lambda mu) / (lambda + mu); undefined on the
/// antidiagonal.
inline std::complex<double> weight_product(std::complex<double> la, std::complex<double> mu,
                                           double pole_eps = 1e-12) {
  if (std::abs(la + mu) <= pole_eps) throw WeightPole("weight_product: lambda + mu = 0");
  return (1.0 + la * mu) / (la + mu);
}

/// Generalized eigenspace decomposition with eigenvalue clustering.
inline WeightDecomposition weight_decomposition(const Mat<double>& op, double cluster_eps = 1e-7) {
  Eigen::MatrixXd a = to_eigen(op);
  int n = int(a.rows());
  Eigen::EigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw std::runtime_error("weight_decomposition: eigensolver failed");
  std::vector<std::complex<double>> evs(n);
  for (int i = 0; i < n; ++i) evs[i] = es.eigenvalues()(i);
  std::sort(evs.begin(), evs.end(), [](auto l, auto r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  std::vector<std::pair<std::complex<double>, int>> clusters;
  for (const auto& ev : evs) {
    if (!clusters.empty() && std::abs(ev - clusters.back().first) <= cluster_eps) {
      auto& [center, count] = clusters.back();
      center = (center * double(count) + ev) / double(count + 1);
      ++count;
    } else {
      clusters.emplace_back(ev, 1);
    }
  }
  for (size_t i = 0; i < clusters.size(); ++i)
    for (size_t j = i + 1; j < clusters.size(); ++j)
      if (std::abs(clusters[i].first - clusters[j].first) <= 10.0 * cluster_eps)
        throw ClusteringAmbiguity("weight_decomposition: two eigenvalue clusters closer than 10*eps");

  WeightDecomposition dec;
  Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
  for (const auto& [lambda, mult] : clusters) {
    Eigen::MatrixXcd shifted = ac - lambda * Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 0; k < mult; ++k) power = power * shifted;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(power);
    lu.setThreshold(1e-9);
    Eigen::MatrixXcd kernel = lu.kernel();
    if (int(kernel.cols()) != mult)
      throw std::runtime_error("weight_decomposition: generalized eigenspace dimension mismatch");
    dec.spaces.push_back({lambda, kernel});
  }
  if (dec.total_dim() != n) throw std::runtime_error("weight_decomposition: dimensions do not sum");
  return dec;
}

namespace detail {

/// Coefficients of v in the concatenated weight-space basis.
inline Eigen::VectorXcd weight_coordinates(const WeightDecomposition& dec, const Eigen::VectorXcd& v) {
  int n = int(v.size());
  Eigen::MatrixXcd all(n, n);
  int col = 0;
  for (const auto& s : dec.spaces) {
    all.block(0, col, n, s.basis.cols()) = s.basis;
    col += int(s.basis.cols());
  }
  return all.fullPivLu().solve(v);
}

inline Eigen::VectorXcd complex_bracket(const LieAlgebra<double>& L, const Eigen::VectorXcd& x,
                                        const Eigen::VectorXcd& y) {
  int n = L.dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (const auto& [key, c] : L.bracket_terms()) {
    auto [i, j, k] = key;
    out(k) += c * (x(i) * y(j) - x(j) * y(i));
  }
  return out;
}

}  // namespace detail

/// Weight-space structure of an R-matrix: bracket containment
/// [g_la, g_mu] in g_{la o mu}, orthogonality off the antidiagonal,
/// commutation of opposite non-unit weights, and the subalgebra claims
/// for g_{+1} and g_{-1}.
inline CheckReport<double> check_lemma211(const MetricalLieAlgebra<double>& M, const WeightDecomposition& dec,
                                          double tol, double weight_eps = 1e-6) {
  CheckReport<double> rep;
  rep.check = "weight-space-structure";
  const auto L = M.algebra();
  Eigen::MatrixXcd gram = to_eigen(M.gram()).cast<std::complex<double>>();

  auto residual_outside = [&](const Eigen::VectorXcd& v, int target_space) {
    if (v.norm() < 1e-14) return 0.0;
    Eigen::VectorXcd coeff = detail::weight_coordinates(dec, v);
    double res = 0.0;
    int col = 0;
    for (size_t s = 0; s < dec.spaces.size(); ++s) {
      int w = int(dec.spaces[s].basis.cols());
      if (int(s) != target_space)
        for (int k = 0; k < w; ++k) res = std::max(res, std::abs(coeff(col + k)));
      col += w;
    }
    return res;
  };

  for (size_t a = 0; a < dec.spaces.size(); ++a)
    for (size_t b = 0; b < dec.spaces.size(); ++b) {
      auto la = dec.spaces[a].weight;
      auto mu = dec.spaces[b].weight;
      bool antidiagonal = std::abs(la + mu) <= weight_eps;
      bool la_unit = std::abs(la - 1.0) <= weight_eps || std::abs(la + 1.0) <= weight_eps;
      for (int i = 0; i < dec.spaces[a].basis.cols(); ++i)
        for (int j = 0; j < dec.spaces[b].basis.cols(); ++j) {
          Eigen::VectorXcd va = dec.spaces[a].basis.col(i);
          Eigen::VectorXcd vb = dec.spaces[b].basis.col(j);
          if (!antidiagonal) {
            // Orthogonality g(g_la, g_mu) = 0 (bilinear extension).
            rep.absorb(std::abs((va.transpose() * gram * vb)(0, 0)));
            auto prod = weight_product(la, mu);
            int target = dec.find(prod, weight_eps);
            Eigen::VectorXcd br = detail::complex_bracket(L, va, vb);
            if (target < 0)
              rep.absorb(br.cwiseAbs().maxCoeff());
            else
              rep.absorb(residual_outside(br, target));
          } else if (!la_unit) {
            // [g_la, g_{-la}] = 0 for la != +-1.
            rep.absorb(detail::complex_bracket(L, va, vb).cwiseAbs().maxCoeff());
          }
        }
    }

  // g_{+1}, g_{-1} are subalgebras and absorb brackets with other weights.
  for (double unit : {1.0, -1.0}) {
    int u = dec.find(unit, weight_eps);
    if (u < 0) continue;
    for (size_t a = 0; a < dec.spaces.size(); ++a) {
      bool a_other_unit = std::abs(dec.spaces[a].weight + unit) <= weight_eps;
      if (a_other_unit) continue;
      for (int i = 0; i < dec.spaces[a].basis.cols(); ++i)
        for (int j = 0; j < dec.spaces[u].basis.cols(); ++j) {
          Eigen::VectorXcd br =
              detail::complex_bracket(L, dec.spaces[a].basis.col(i), dec.spaces[u].basis.col(j));
          rep.absorb(residual_outside(br, u));
        }
    }
  }
  rep.finish(tol);
  return rep;
}

}  // namespace manin
