#pragma once

#include "manin/lie_algebra.hpp"
#include "manin/multivector.hpp"

namespace manin {

namespace detail {

/// Blade as a sorted index list.
inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> idx;
  while (b) {
    Blade low = b & (~b + 1u);
    b ^= low;
    idx.push_back(std::countr_zero(low));
  }
  return idx;
}

template <class S>
Multivector<S> blade_multivector(Blade b, const S& c) {
  Multivector<S> m(blade_degree(b));
  m.add_term(b, c);
  return m;
}

}  // namespace detail

/// Algebraic Schouten-Nijenhuis bracket on decomposables,
///   [X_1^...^X_p, Y_1^...^Y_q] =
///     sum_{i,j} (-1)^{i+j} [X_i,Y_j] ^ X_1^..^X_i^..^X_p ^ Y_1^..^Y_j^..^Y_q,
/// extended bilinearly. Degrees >= 1 (degree-0 needs group-level data).
template <class S>
Multivector<S> schouten(const LieAlgebra<S>& L, const Multivector<S>& u, const Multivector<S>& v) {
  if (u.degree() < 1 || v.degree() < 1)
    throw std::invalid_argument("schouten: degree-0 arguments live at the group level");
  Multivector<S> out(u.degree() + v.degree() - 1);
  for (const auto& [bu, cu] : u.terms()) {
    auto ui = detail::blade_indices(bu);
    for (const auto& [bv, cv] : v.terms()) {
      auto vi = detail::blade_indices(bv);
      S coeff = cu * cv;
      for (size_t i = 0; i < ui.size(); ++i)
        for (size_t j = 0; j < vi.size(); ++j) {
          Vec<S> br = L.bracket_basis(ui[i], vi[j]);
          if (max_abs(br) == ScalarTraits<S>::zero()) continue;
          Blade rest_u = bu ^ (Blade(1) << ui[i]);
          Blade rest_v = bv ^ (Blade(1) << vi[j]);
          int s = ((i + 1 + j + 1) % 2 == 0) ? 1 : -1;
          Multivector<S> tail = wedge(detail::blade_multivector(rest_u, ScalarTraits<S>::one()),
                                      detail::blade_multivector(rest_v, ScalarTraits<S>::one()));
          Multivector<S> head = wedge(Multivector<S>::from_vector(br), tail);
          out = out + head * (s > 0 ? coeff : -coeff);
        }
    }
  }
  return out;
}

/// Independent route for the same bracket, used as an oracle in tests: peel
/// the first factor with the graded Leibniz rule, reduce to the derivation
/// extension of ad. Shares no sign bookkeeping with schouten() above.
template <class S>
Multivector<S> schouten_oracle(const LieAlgebra<S>& L, const Multivector<S>& u, const Multivector<S>& v) {
  if (u.degree() < 1 || v.degree() < 1)
    throw std::invalid_argument("schouten_oracle: degrees must be >= 1");
  // ad_x extended as a derivation of the exterior algebra.
  auto ad_derivation = [&L](const Vec<S>& x, const Multivector<S>& w) {
    Multivector<S> out(w.degree());
    for (const auto& [b, c] : w.terms())
      for (int i : detail::blade_indices(b)) {
        Vec<S> br = L.bracket(x, basis_vector<S>(L.dim(), i));
        Blade rest = b ^ (Blade(1) << i);
        // In-place replacement X_i -> [x, X_i]: lower ^ [x,X_i] ^ upper.
        Multivector<S> repl = wedge(detail::blade_multivector(rest & ((Blade(1) << i) - 1u), c),
                                    wedge(Multivector<S>::from_vector(br),
                                          detail::blade_multivector(rest & ~((Blade(1) << i) - 1u),
                                                                    ScalarTraits<S>::one())));
        out = out + repl;
      }
    return out;
  };
  if (u.degree() == 1) return ad_derivation(u.to_vector(L.dim()), v);

  Multivector<S> out(u.degree() + v.degree() - 1);
  int q = v.degree();
  for (const auto& [bu, cu] : u.terms()) {
    auto idx = detail::blade_indices(bu);
    // u-blade = X ^ W with X the lowest index.
    Vec<S> x = basis_vector<S>(L.dim(), idx[0]);
    Blade rest = bu ^ (Blade(1) << idx[0]);
    Multivector<S> w = detail::blade_multivector(rest, cu);
    Multivector<S> x_mv = Multivector<S>::from_vector(x);
    // [X^W, V] = X ^ [W,V] + (-1)^{w(q-1)} [X,V] ^ W
    Multivector<S> t1 = wedge(x_mv, schouten_oracle(L, w, v));
    Multivector<S> t2 = wedge(ad_derivation(x, v), detail::blade_multivector(rest, cu));
    int w_deg = blade_degree(rest);
    if ((w_deg * (q - 1)) % 2 != 0) t2 = -t2;
    out = out + t1 + t2;
  }
  return out;
}

/// Chevalley coboundary of a bivector: (dC)(X_i) = ad_{X_i} C.
template <class S>
CochainMap<S> coboundary(const LieAlgebra<S>& L, const Multivector<S>& c) {
  if (c.degree() != 2) throw std::invalid_argument("coboundary: bivector expected");
  CochainMap<S> out(L.dim(), 2);
  for (int i = 0; i < L.dim(); ++i) out.image(i) = schouten(L, Multivector<S>::basis_element(i), c);
  return out;
}

/// Cocycle condition for a map b': g -> ^2 g:
///   -b'([X,Y]) + ad_X(b'(Y)) - ad_Y(b'(X)) = 0 over all basis pairs.
template <class S>
CheckReport<S> check_cocycle(const LieAlgebra<S>& L, const CochainMap<S>& bp, const S& tol) {
  CheckReport<S> rep;
  rep.check = "cocycle";
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      Multivector<S> r = -bp.apply(L.bracket_basis(i, j));
      r = r + schouten(L, Multivector<S>::basis_element(i), bp.image(j));
      r = r - schouten(L, Multivector<S>::basis_element(j), bp.image(i));
      rep.absorb(r.max_abs());
    }
  rep.finish(tol);
  return rep;
}

/// ad_X U = 0 for all basis X.
template <class S>
CheckReport<S> check_ad_invariant(const LieAlgebra<S>& L, const Multivector<S>& u, const S& tol) {
  CheckReport<S> rep;
  rep.check = "ad-invariant";
  for (int i = 0; i < L.dim(); ++i)
    rep.absorb(schouten(L, Multivector<S>::basis_element(i), u).max_abs());
  rep.finish(tol);
  return rep;
}

/// Basis (as coefficient columns over blades) of the space of ad-invariant
/// p-vectors, found by solving ad_X U = 0 for all basis X.
template <class S>
std::vector<Multivector<S>> invariant_multivectors(const LieAlgebra<S>& L, int degree) {
  std::vector<Blade> blades;
  for (Blade b = 0; b < (Blade(1) << L.dim()); ++b)
    if (blade_degree(b) == degree) blades.push_back(b);
  std::map<Blade, int> pos;
  for (size_t k = 0; k < blades.size(); ++k) pos[blades[k]] = int(k);
  Mat<S> sys(L.dim() * int(blades.size()), int(blades.size()));
  for (size_t col = 0; col < blades.size(); ++col) {
    Multivector<S> u = detail::blade_multivector(blades[col], ScalarTraits<S>::one());
    for (int i = 0; i < L.dim(); ++i) {
      Multivector<S> img = schouten(L, Multivector<S>::basis_element(i), u);
      for (const auto& [b, c] : img.terms()) sys(i * int(blades.size()) + pos[b], int(col)) = c;
    }
  }
  Mat<S> ker = kernel_basis(sys);
  std::vector<Multivector<S>> out;
  for (int j = 0; j < ker.cols(); ++j) {
    Multivector<S> u(degree);
    for (size_t k = 0; k < blades.size(); ++k) u.add_term(blades[k], ker(int(k), j));
    out.push_back(u);
  }
  return out;
}

}  // namespace manin
