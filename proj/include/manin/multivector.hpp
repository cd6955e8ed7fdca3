#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "manin/linalg.hpp"

namespace manin {

/// Index blade: bit i set means basis index i participates, in increasing
/// order. All signs derive from the parity of the sorting permutation.
using Blade = std::uint32_t;

inline int blade_degree(Blade b) { return std::popcount(b); }

/// Sign of wedging blades a and b into the canonically ordered blade a|b,
/// or 0 if they overlap.
inline int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  // For every bit of a, count the lower-order bits of b it must jump over.
  for (Blade rest = a; rest;) {
    Blade low = rest & (~rest + 1u);
    rest ^= low;
    swaps += std::popcount(b & (low - 1u));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

/// Element of the exterior algebra over the basis of a Lie algebra,
/// homogeneous of a fixed degree.
template <class S>
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(int degree) : degree_(degree) {}

  static Multivector basis_element(int i) {
    Multivector m(1);
    m.terms_[Blade(1) << i] = ScalarTraits<S>::one();
    return m;
  }

  static Multivector from_vector(const Vec<S>& x) {
    Multivector m(1);
    for (size_t i = 0; i < x.size(); ++i)
      if (!ScalarTraits<S>::is_zero(x[i])) m.terms_[Blade(1) << i] = x[i];
    return m;
  }

  static Multivector scalar(const S& v) {
    Multivector m(0);
    if (!ScalarTraits<S>::is_zero(v)) m.terms_[0] = v;
    return m;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Blade, S>& terms() const { return terms_; }

  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? ScalarTraits<S>::zero() : it->second;
  }

  void add_term(Blade b, const S& c) {
    if (ScalarTraits<S>::is_zero(c)) return;
    auto it = terms_.find(b);
    if (it == terms_.end())
      terms_[b] = c;
    else {
      it->second += c;
      if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Multivector operator+(const Multivector& o) const {
    Multivector r = *this;
    for (const auto& [b, c] : o.terms_) r.add_term(b, c);
    return r;
  }
  Multivector operator-(const Multivector& o) const {
    Multivector r = *this;
    for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
    return r;
  }
  Multivector operator-() const {
    Multivector r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }
  Multivector operator*(const S& s) const {
    Multivector r(degree_);
    if (ScalarTraits<S>::is_zero(s)) return r;
    r.terms_ = terms_;
    for (auto& [b, c] : r.terms_) c = c * s;
    return r;
  }

  S max_abs() const {
    S m = ScalarTraits<S>::zero();
    for (const auto& [b, c] : terms_) {
      S a = ScalarTraits<S>::abs(c);
      if (m < a) m = a;
    }
    return m;
  }

  /// Degree-1 part as a coordinate vector.
  Vec<S> to_vector(int dim) const {
    Vec<S> v(dim, ScalarTraits<S>::zero());
    for (const auto& [b, c] : terms_) v[std::countr_zero(b)] = c;
    return v;
  }

 private:
  int degree_ = 0;
  std::map<Blade, S> terms_;
};

template <class S>
Multivector<S> wedge(const Multivector<S>& u, const Multivector<S>& v) {
  Multivector<S> r(u.degree() + v.degree());
  for (const auto& [bu, cu] : u.terms())
    for (const auto& [bv, cv] : v.terms()) {
      int s = wedge_sign(bu, bv);
      if (s == 0) continue;
      r.add_term(bu | bv, s > 0 ? cu * cv : -(cu * cv));
    }
  return r;
}

/// Insertion operator: the adjoint of wedging with the dual 1-form, for a
/// covector given in dual-basis coordinates. Degree p -> p-1.
template <class S>
Multivector<S> insertion(const Vec<S>& covector, const Multivector<S>& u) {
  Multivector<S> r(u.degree() > 0 ? u.degree() - 1 : 0);
  if (u.degree() == 0) return r;
  for (const auto& [b, c] : u.terms()) {
    int pos = 0;
    for (Blade rest = b; rest;) {
      Blade low = rest & (~rest + 1u);
      rest ^= low;
      int i = std::countr_zero(low);
      if (!ScalarTraits<S>::is_zero(covector[i])) {
        S val = covector[i] * c;
        r.add_term(b ^ low, (pos % 2 == 0) ? val : -val);
      }
      ++pos;
    }
  }
  return r;
}

/// Pairing of a p-vector with a wedge of p covectors (determinant convention).
template <class S>
S pair_with_covectors(const Multivector<S>& u, const std::vector<Vec<S>>& covectors) {
  // <a_1 ^ ... ^ a_p, u> = i(a_p) ... i(a_1) u, so insert in the given order.
  Multivector<S> cur = u;
  for (const auto& a : covectors) cur = insertion(a, cur);
  return cur.degree() == 0 ? cur.coefficient(0) : ScalarTraits<S>::zero();
}

/// Linear map from the algebra to a fixed exterior degree, stored by images
/// of the basis (e.g. a cobracket g -> \wedge^2 g).
template <class S>
class CochainMap {
 public:
  CochainMap() = default;
  CochainMap(int source_dim, int target_degree)
      : target_degree_(target_degree), images_(source_dim, Multivector<S>(target_degree)) {}

  int source_dim() const { return int(images_.size()); }
  int target_degree() const { return target_degree_; }

  Multivector<S>& image(int i) { return images_[i]; }
  const Multivector<S>& image(int i) const { return images_[i]; }

  Multivector<S> apply(const Vec<S>& x) const {
    Multivector<S> out(target_degree_);
    for (int i = 0; i < source_dim(); ++i)
      if (!ScalarTraits<S>::is_zero(x[i])) out = out + images_[i] * x[i];
    return out;
  }

 private:
  int target_degree_ = 0;
  std::vector<Multivector<S>> images_;
};

template <class S>
Multivector<double> to_float(const Multivector<S>& u) {
  Multivector<double> f(u.degree());
  for (const auto& [b, c] : u.terms()) f.add_term(b, ScalarTraits<S>::to_double(c));
  return f;
}

}  // namespace manin
