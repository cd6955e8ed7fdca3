#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace manin {

/// Exact rational scalar. Arbitrary precision, always normalized.
/// Expression templates are off so arithmetic yields plain values, which
/// keeps the scalar usable in generic code shared with double.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Scalar traits for the two-level scalar tower (exact rationals / doubles).
/// Mixed-mode arithmetic is forbidden by construction: conversion to double
/// is explicit and one-way (see to_double).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  static bool is_zero(const Rational& v) { return v == 0; }
  static double to_double(const Rational& v) {
    return boost::multiprecision::numerator(v).convert_to<double>() /
           boost::multiprecision::denominator(v).convert_to<double>();
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long v) { return static_cast<double>(v); }
  static double abs(double v) { return std::fabs(v); }
  static bool is_zero(double v) { return v == 0.0; }
  static double to_double(double v) { return v; }
};

/// Parses "p/q" or "p" as an exact rational.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Rational(cpp_int(text));
  cpp_int num(text.substr(0, slash));
  cpp_int den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  return Rational(num, den);
}

inline std::string format_rational(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace manin
