#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace enlarge {

using Rational = mpq_class;

enum class ArithMode { Float, Exact };

/// Relative tolerance for every rank / zero / sign decision made in float mode.
inline constexpr double kTau = 1e-9;

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr ArithMode mode = ArithMode::Float;
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ArithMode mode = ArithMode::Exact;
};

template <class F>
concept Field = requires { FieldTraits<F>::exact; };

template <Field F>
inline constexpr bool is_exact_v = FieldTraits<F>::exact;

inline double abs_value(double v) { return std::abs(v); }
inline Rational abs_value(const Rational& v) { return Rational(abs(v)); }

inline double to_double(double v) { return v; }
/// Nearest double (get_d truncates).
double to_double(const Rational& v);

template <Field To>
To convert_scalar(const Rational& v) {
  if constexpr (std::is_same_v<To, double>) {
    return to_double(v);
  } else {
    return v;
  }
}

template <Field To>
To convert_scalar(double v) {
  static_assert(std::is_same_v<To, double>, "float values cannot be promoted to exact");
  return v;
}

/// Zero test: exact comparison for rationals, |v| <= tau*max(1, scale) for doubles.
inline bool is_negligible(const Rational& v, const Rational& /*scale*/) { return sgn(v) == 0; }
inline bool is_negligible(double v, double scale) {
  return std::abs(v) <= kTau * std::max(1.0, std::abs(scale));
}

/// lhs <= rhs, with float slack tau*max(1, |lhs|, |rhs|, scale).
inline bool approx_le(const Rational& lhs, const Rational& rhs, const Rational& /*scale*/) {
  return lhs <= rhs;
}
inline bool approx_le(double lhs, double rhs, double scale) {
  const double s = std::max({1.0, std::abs(lhs), std::abs(rhs), std::abs(scale)});
  return lhs <= rhs + kTau * s;
}

/// Exact decimal / "p/q" / integer parse. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when integral) for rationals; shortest round-trip decimal for doubles.
std::string format_scalar(const Rational& v);
std::string format_scalar(double v);

}  // namespace enlarge
