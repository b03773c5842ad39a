#pragma once

// Scalar policy shared by the graph-native modules. Every algorithm that
// works on a metric graph is written once against a scalar type T and
// instantiated for two fields:
//
//   Rational  exact arithmetic (GMP mpq), used when every edge length is
//             given as a decimal or p/q string;
//   double    binary64 with an absolute/relative comparison slack of 1e-12.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

namespace inflap {

using Rational = mpq_class;

template <class T>
struct Scalar;

template <>
struct Scalar<double> {
  static constexpr bool kExact = false;
  static constexpr double kTolerance = 1e-12;
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
};

template <>
struct Scalar<Rational> {
  static constexpr bool kExact = true;
  static constexpr double kTolerance = 0.0;
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_double(double x) { return Rational(x); }
};

template <class T>
inline constexpr bool is_exact_v = Scalar<T>::kExact;

template <class T>
double to_double(const T& x) {
  return Scalar<T>::to_double(x);
}

template <class T>
T from_double(double x) {
  return Scalar<T>::from_double(x);
}

template <class T>
T abs_of(const T& x) {
  if (x < 0) return T(-x);
  return x;
}

template <class T>
T min_of(const T& a, const T& b) {
  return b < a ? b : a;
}

template <class T>
T max_of(const T& a, const T& b) {
  return a < b ? b : a;
}

/// Slack used when comparing a and b: zero for exact fields.
template <class T>
double slack(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return 0.0;
  } else {
    return Scalar<T>::kTolerance *
           std::max({1.0, std::abs(to_double(a)), std::abs(to_double(b))});
  }
}

template <class T>
bool near(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return std::abs(a - b) <= slack(a, b);
  }
}

/// a <= b up to the field's slack.
template <class T>
bool le(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a <= b;
  } else {
    return a <= b + slack(a, b);
  }
}

/// a < b by more than the field's slack.
template <class T>
bool lt(const T& a, const T& b) {
  return !le(b, a);
}

/// Parses "3", "-1.25", "2e-3" or "p/q" into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& x);

template <class T>
std::string to_text(const T& x) {
  if constexpr (is_exact_v<T>) {
    return format_rational(x);
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
}

}  // namespace inflap
