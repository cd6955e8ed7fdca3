#pragma once

#include <json.hpp>

#include "manin/constructions.hpp"
#include "manin/multivector.hpp"

namespace manin {

using Json = nlohmann::json;

/// Scalar parsing rule: strings like "p/q" are exact rationals, bare
/// numbers are floats. Exact mode refuses non-integral bare numbers so the
/// two towers never mix silently.
template <class S>
S parse_scalar(const Json& j);

template <>
inline Rational parse_scalar<Rational>(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("exact mode: scalar must be \"p/q\" or an integer");
}

template <>
inline double parse_scalar<double>(const Json& j) {
  if (j.is_string()) return ScalarTraits<Rational>::to_double(parse_rational(j.get<std::string>()));
  if (j.is_number()) return j.get<double>();
  throw std::invalid_argument("scalar must be a number or \"p/q\" string");
}

template <class S>
Json scalar_to_json(const S& v);

template <>
inline Json scalar_to_json<Rational>(const Rational& v) {
  return format_rational(v);
}
template <>
inline Json scalar_to_json<double>(const double& v) {
  return v;
}

template <class S>
Mat<S> parse_matrix(const Json& j) {
  int rows = int(j.size());
  int cols = rows ? int(j.at(0).size()) : 0;
  Mat<S> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = parse_scalar<S>(j.at(r).at(c));
  return m;
}

template <class S>
Json matrix_to_json(const Mat<S>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json<S>(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

/// {"deg":2,"terms":[{"idx":[0,1],"v":"1"}]}
template <class S>
Multivector<S> parse_multivector(const Json& j) {
  Multivector<S> m(j.at("deg").get<int>());
  for (const auto& term : j.at("terms")) {
    Blade b = 0;
    for (int i : term.at("idx").get<std::vector<int>>()) b |= Blade(1) << i;
    if (blade_degree(b) != m.degree()) throw std::invalid_argument("multivector: wrong blade degree");
    m.add_term(b, parse_scalar<S>(term.at("v")));
  }
  return m;
}

template <class S>
Json multivector_to_json(const Multivector<S>& m) {
  Json terms = Json::array();
  for (const auto& [b, c] : m.terms()) {
    Json idx = Json::array();
    for (int i : detail::blade_indices(b)) idx.push_back(i);
    terms.push_back(Json{{"idx", idx}, {"v", scalar_to_json<S>(c)}});
  }
  return Json{{"deg", m.degree()}, {"terms", terms}};
}

/// Algebra schema:
/// {"dim": n, "basis": ["X1",...], "brackets": [{"i":0,"j":1,"k":2,"v":"1"},...],
///  "metric": [[...]], "cobracket": [mv,...], "rmatrix": [[...]],
///  "operator": [[...]], "decomposition": {"plus": [...], "minus": [...], "zero": [...]}}
/// Everything past dim/basis/brackets is optional.
template <class S>
LieAlgebra<S> parse_algebra(const Json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = j.at("basis").get<std::vector<std::string>>();
  LieAlgebra<S> L(dim, basis);
  for (const auto& t : j.at("brackets"))
    L.add_bracket_term(t.at("i").get<int>(), t.at("j").get<int>(), t.at("k").get<int>(),
                       parse_scalar<S>(t.at("v")));
  return L;
}

template <class S>
Json algebra_to_json(const LieAlgebra<S>& L) {
  Json brackets = Json::array();
  for (const auto& [key, c] : L.bracket_terms()) {
    auto [i, j, k] = key;
    brackets.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"v", scalar_to_json<S>(c)}});
  }
  return Json{{"dim", L.dim()}, {"basis", L.labels()}, {"brackets", brackets}};
}

template <class S>
MetricalLieAlgebra<S> parse_metrical(const Json& j) {
  if (!j.contains("metric")) throw std::invalid_argument("algebra file has no \"metric\"");
  return MetricalLieAlgebra<S>(parse_algebra<S>(j), parse_matrix<S>(j.at("metric")));
}

template <class S>
Json metrical_to_json(const MetricalLieAlgebra<S>& M) {
  Json j = algebra_to_json(M.algebra());
  j["metric"] = matrix_to_json(M.gram());
  return j;
}

template <class S>
CochainMap<S> parse_cobracket(const Json& j, int dim) {
  CochainMap<S> c(dim, 2);
  const auto& arr = j.at("cobracket");
  if (int(arr.size()) != dim) throw std::invalid_argument("cobracket: one image per basis element");
  for (int i = 0; i < dim; ++i) c.image(i) = parse_multivector<S>(arr.at(i));
  return c;
}

template <class S>
Json cobracket_to_json(const CochainMap<S>& c) {
  Json arr = Json::array();
  for (int i = 0; i < c.source_dim(); ++i) arr.push_back(multivector_to_json(c.image(i)));
  return arr;
}

template <class S>
Decomposition<S> parse_decomposition(const Json& j, int dim) {
  const auto& d = j.at("decomposition");
  std::vector<int> zero;
  if (d.contains("zero")) zero = d.at("zero").get<std::vector<int>>();
  return Decomposition<S>::from_indices(dim, d.at("plus").get<std::vector<int>>(),
                                        d.at("minus").get<std::vector<int>>(), zero);
}

template <class S>
Json report_to_json(const CheckReport<S>& rep) {
  return Json{{"check", rep.check},
              {"residual", ScalarTraits<S>::to_double(rep.max_violation)},
              {"pass", rep.pass}};
}

}  // namespace manin
