#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace cliffsyl {

// Exact scalar field. mpq_class keeps values canonical (reduced, positive
// denominator), so equality is structural.
using Rational = mpq_class;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static const char* name() { return "rational"; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  // Shortest fixed-notation decimal that parses back to the same double.
  static std::string to_string(double x);
  static const char* name() { return "float"; }
};

// Parses "p", "p/q" or a plain decimal "i.f". Decimals are exact in rational
// mode (0.125 -> 1/8). Throws std::invalid_argument on malformed input.
template <class T>
T parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
double parse_scalar<double>(std::string_view text);

}  // namespace cliffsyl
