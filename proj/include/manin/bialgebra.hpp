#pragma once

#include "manin/metric.hpp"
#include "manin/schouten.hpp"

namespace manin {

/// Lie bialgebra: a Lie algebra with a cobracket g -> ^2 g that is a
/// 1-cocycle and whose dual map is a Lie bracket on the dual space.
template <class S>
class Bialgebra {
 public:
  Bialgebra() = default;
  Bialgebra(LieAlgebra<S> algebra, CochainMap<S> cobracket)
      : algebra_(std::move(algebra)), cobracket_(std::move(cobracket)) {
    if (cobracket_.source_dim() != algebra_.dim() || cobracket_.target_degree() != 2)
      throw std::invalid_argument("bialgebra: cobracket must map g -> ^2 g");
  }

  const LieAlgebra<S>& algebra() const { return algebra_; }
  const CochainMap<S>& cobracket() const { return cobracket_; }

  /// The bracket induced on the dual space, as a Lie algebra in dual
  /// coordinates: c*(i,j,k) = <b'(X_k), e^i ^ e^j>.
  LieAlgebra<S> dual_algebra() const {
    int n = algebra_.dim();
    std::vector<std::string> labels;
    for (const auto& l : algebra_.labels()) labels.push_back(l + "*");
    LieAlgebra<S> dual(n, labels);
    for (int k = 0; k < n; ++k)
      for (const auto& [b, c] : cobracket_.image(k).terms()) {
        auto idx = detail::blade_indices(b);
        dual.add_bracket_term(idx[0], idx[1], k, c);
      }
    return dual;
  }

  CheckReport<S> check(const S& tol) const {
    CheckReport<S> rep = check_cocycle(algebra_, cobracket_, tol);
    rep.check = "bialgebra";
    CheckReport<S> dual_jacobi = dual_algebra().check_jacobi(tol);
    rep.absorb(dual_jacobi.max_violation);
    rep.finish(tol);
    return rep;
  }

 private:
  LieAlgebra<S> algebra_;
  CochainMap<S> cobracket_;
};

}  // namespace manin
