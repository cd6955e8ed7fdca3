#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "manin/linalg.hpp"

namespace manin {

/// Outcome of an identity check: the largest violation found and the verdict.
template <class S>
struct CheckReport {
  std::string check;
  S max_violation = ScalarTraits<S>::zero();
  bool pass = true;

  void absorb(const S& violation) {
    if (max_violation < violation) max_violation = violation;
  }
  void finish(const S& tol) { pass = !(max_violation > tol); }
};

/// Lie algebra given by structure constants on a finite basis:
/// [X_i, X_j] = sum_k c(i,j,k) X_k. Stored sparse with i < j canonicalized;
/// the antisymmetric completion is implicit.
template <class S>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(int dim, std::vector<std::string> labels) : dim_(dim), labels_(std::move(labels)) {
    if (int(labels_.size()) != dim_) labels_.resize(dim_, "?");
  }

  static LieAlgebra abelian(int dim) {
    std::vector<std::string> l;
    for (int i = 0; i < dim; ++i) l.push_back("X" + std::to_string(i + 1));
    return LieAlgebra(dim, l);
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Adds c to the coefficient of X_k in [X_i, X_j] (and -c to [X_j, X_i]).
  void add_bracket_term(int i, int j, int k, S c) {
    if (i == j) return;
    if (i > j) {
      std::swap(i, j);
      c = -c;
    }
    auto key = std::make_tuple(i, j, k);
    auto it = c_.find(key);
    if (it == c_.end())
      c_[key] = c;
    else {
      it->second += c;
      if (ScalarTraits<S>::is_zero(it->second)) c_.erase(it);
    }
  }

  const std::map<std::tuple<int, int, int>, S>& bracket_terms() const { return c_; }

  /// [X_i, X_j] in basis coordinates.
  Vec<S> bracket_basis(int i, int j) const {
    Vec<S> out(dim_, ScalarTraits<S>::zero());
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto lo = c_.lower_bound(std::make_tuple(i, j, 0));
    auto hi = c_.upper_bound(std::make_tuple(i, j, dim_));
    for (auto it = lo; it != hi; ++it) out[std::get<2>(it->first)] = flip ? -it->second : it->second;
    return out;
  }

  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    if (int(x.size()) != dim_ || int(y.size()) != dim_)
      throw std::invalid_argument("bracket: coordinate vector of wrong length");
    Vec<S> out(dim_, ScalarTraits<S>::zero());
    for (const auto& [key, c] : c_) {
      auto [i, j, k] = key;
      out[k] += c * (x[i] * y[j] - x[j] * y[i]);
    }
    return out;
  }

  /// ad(x): y -> [x, y], as a matrix on basis coordinates.
  Mat<S> ad(const Vec<S>& x) const {
    Mat<S> m(dim_, dim_);
    for (const auto& [key, c] : c_) {
      auto [i, j, k] = key;
      m(k, j) += c * x[i];
      m(k, i) -= c * x[j];
    }
    return m;
  }

  /// coad(x) = -ad(x)^T, acting on dual coordinates.
  Mat<S> coad(const Vec<S>& x) const { return -ad(x).transpose(); }

  CheckReport<S> check_jacobi(const S& tol) const {
    CheckReport<S> rep;
    rep.check = "jacobi";
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j) {
        Vec<S> bij = bracket_basis(i, j);
        for (int k = j + 1; k < dim_; ++k) {
          Vec<S> jac = bracket(bij, basis_vector<S>(dim_, k));
          Vec<S> bjk = bracket_basis(j, k);
          jac = jac + bracket(bjk, basis_vector<S>(dim_, i));
          Vec<S> bki = bracket_basis(k, i);
          jac = jac + bracket(bki, basis_vector<S>(dim_, j));
          rep.absorb(max_abs(jac));
        }
      }
    rep.finish(tol);
    return rep;
  }

  /// Gram matrix of tr(ad x . ad y); may be degenerate.
  Mat<S> killing_gram() const {
    std::vector<Mat<S>> ads;
    ads.reserve(dim_);
    for (int i = 0; i < dim_; ++i) ads.push_back(ad(basis_vector<S>(dim_, i)));
    Mat<S> g(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) {
        Mat<S> p = ads[i] * ads[j];
        S tr = ScalarTraits<S>::zero();
        for (int k = 0; k < dim_; ++k) tr += p(k, k);
        g(i, j) = tr;
        g(j, i) = tr;
      }
    return g;
  }

  /// Direct sum with structure constants of both summands.
  static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    std::vector<std::string> labels = a.labels_;
    for (const auto& l : b.labels_) labels.push_back(l + "'");
    LieAlgebra s(a.dim_ + b.dim_, labels);
    for (const auto& [key, c] : a.c_) s.c_[key] = c;
    for (const auto& [key, c] : b.c_) {
      auto [i, j, k] = key;
      s.c_[std::make_tuple(i + a.dim_, j + a.dim_, k + a.dim_)] = c;
    }
    return s;
  }

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::map<std::tuple<int, int, int>, S> c_;
};

template <class S>
LieAlgebra<double> to_float(const LieAlgebra<S>& L) {
  LieAlgebra<double> f(L.dim(), L.labels());
  for (const auto& [key, c] : L.bracket_terms()) {
    auto [i, j, k] = key;
    f.add_bracket_term(i, j, k, ScalarTraits<S>::to_double(c));
  }
  return f;
}

}  // namespace manin
