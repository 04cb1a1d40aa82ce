#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace equiform {

/// Arbitrary-precision rational; the authoritative scalar.
using Rational = mpq_class;

/// Zero-test tolerance for float mode. Exact mode ignores it.
struct Tolerance {
  double eps = 1e-9;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static Rational from_int(long v) { return Rational(v); }
  static Rational from_ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static double from_int(long v) { return static_cast<double>(v); }
  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double to_double(double x) { return x; }
  // Structural zero only; tolerance-based tests go through Tolerance.
  static bool is_zero(double x) { return x == 0.0; }
  static double abs(double x) { return std::fabs(x); }
  static std::string to_string(double x);
};

template <class S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

template <class S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

template <class S>
bool is_zero_scalar(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}

template <class S>
std::string to_string(const S& x) {
  return ScalarTraits<S>::to_string(x);
}

/// Zero test honouring the tolerance in float mode: |x| <= eps * scale.
template <class S>
bool is_negligible(const S& x, double scale, Tolerance tol = {}) {
  if constexpr (is_exact_v<S>) {
    (void)scale;
    (void)tol;
    return sgn(x) == 0;
  } else {
    return std::fabs(x) <= tol.eps * scale;
  }
}

/// Parses "p/q", "p" (optionally signed). Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

}  // namespace equiform
