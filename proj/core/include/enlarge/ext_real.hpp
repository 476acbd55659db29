#pragma once

#include <string>

#include "enlarge/error.hpp"
#include "enlarge/scalar.hpp"

namespace enlarge {

/// Value in R ∪ {+∞, -∞}.
template <Field F>
class ExtReal {
 public:
  enum class Kind { Finite, PlusInf, MinusInf };

  ExtReal(F v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static ExtReal plus_inf() { return ExtReal(Kind::PlusInf); }
  static ExtReal minus_inf() { return ExtReal(Kind::MinusInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_plus_inf() const noexcept { return kind_ == Kind::PlusInf; }
  bool is_minus_inf() const noexcept { return kind_ == Kind::MinusInf; }

  const F& value() const {
    require(is_finite(), ErrorCode::InvalidArgument, "value() of an infinite extended real");
    return value_;
  }

  ExtReal operator-() const {
    switch (kind_) {
      case Kind::PlusInf: return minus_inf();
      case Kind::MinusInf: return plus_inf();
      case Kind::Finite: break;
    }
    return ExtReal(F(-value_));
  }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) return ExtReal(F(a.value_ + b.value_));
    require(!((a.is_plus_inf() && b.is_minus_inf()) || (a.is_minus_inf() && b.is_plus_inf())),
            ErrorCode::InvalidArgument, "+inf + -inf is undefined");
    return a.is_finite() ? b : a;
  }
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }

  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ == b.kind_) return a.is_finite() && a.value_ < b.value_;
    return a.is_minus_inf() || b.is_plus_inf();
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

  std::string str() const {
    switch (kind_) {
      case Kind::PlusInf: return "+inf";
      case Kind::MinusInf: return "-inf";
      case Kind::Finite: break;
    }
    return format_scalar(value_);
  }

 private:
  explicit ExtReal(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  F value_;
};

}  // namespace enlarge
