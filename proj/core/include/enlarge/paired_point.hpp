#pragma once

#include <cstddef>
#include <utility>

#include "enlarge/matrix.hpp"

namespace enlarge {

/// A point (x, x*) of R^n x R^n.
template <Field F>
struct PairedPoint {
  Vec<F> x;
  Vec<F> xstar;

  PairedPoint() = default;
  PairedPoint(Vec<F> x_, Vec<F> xstar_) : x(std::move(x_)), xstar(std::move(xstar_)) {
    require(x.size() == xstar.size(), ErrorCode::DimensionMismatch, "x and x* must have equal length");
  }

  static PairedPoint zero(std::size_t n) { return PairedPoint(Vec<F>(n, F(0)), Vec<F>(n, F(0))); }

  /// Splits a concatenated (x | x*) vector of length 2n.
  static PairedPoint from_concat(std::span<const F> v) {
    require(v.size() % 2 == 0, ErrorCode::DimensionMismatch, "concatenated point must have even length");
    const std::size_t n = v.size() / 2;
    return PairedPoint(Vec<F>(v.begin(), v.begin() + n), Vec<F>(v.begin() + n, v.end()));
  }

  std::size_t dim() const noexcept { return x.size(); }

  Vec<F> concat() const {
    Vec<F> v(x);
    v.insert(v.end(), xstar.begin(), xstar.end());
    return v;
  }

  bool is_zero() const {
    for (const F& e : x)
      if (e != 0) return false;
    for (const F& e : xstar)
      if (e != 0) return false;
    return true;
  }

  friend PairedPoint operator+(const PairedPoint& a, const PairedPoint& b) {
    return PairedPoint(a.x + b.x, a.xstar + b.xstar);
  }
  friend PairedPoint operator-(const PairedPoint& a, const PairedPoint& b) {
    return PairedPoint(a.x - b.x, a.xstar - b.xstar);
  }
  friend PairedPoint operator-(const PairedPoint& a) { return PairedPoint(scaled(a.x, F(-1)), scaled(a.xstar, F(-1))); }
  friend PairedPoint operator*(const F& s, const PairedPoint& a) { return PairedPoint(scaled(a.x, s), scaled(a.xstar, s)); }

  friend bool operator==(const PairedPoint&, const PairedPoint&) = default;
};

/// <p.x, q.x*> + <q.x, p.x*>. Symmetric bilinear form of signature (n, n).
template <Field F>
F pairing(const PairedPoint<F>& p, const PairedPoint<F>& q) {
  require(p.dim() == q.dim(), ErrorCode::DimensionMismatch, "pairing of points of different dimension");
  return dot(p.x, q.xstar) + dot(q.x, p.xstar);
}

/// Duality product <x, x*>.
template <Field F>
F duality(const PairedPoint<F>& p) {
  return dot(p.x, p.xstar);
}

/// (x, x*) -> (x, -x*).
template <Field F>
PairedPoint<F> flip_dual(const PairedPoint<F>& p) {
  return PairedPoint<F>(p.x, scaled(p.xstar, F(-1)));
}

template <Field To, Field From>
PairedPoint<To> convert_point(const PairedPoint<From>& p) {
  return PairedPoint<To>(convert_vec<To>(p.x), convert_vec<To>(p.xstar));
}

/// Float closeness |p - q|_inf <= tau max(1, |p|_inf); exact equality for rationals.
template <Field F>
bool points_close(const PairedPoint<F>& p, const PairedPoint<F>& q) {
  if constexpr (is_exact_v<F>) {
    return p == q;
  } else {
    const Vec<double> a = p.concat();
    const Vec<double> b = q.concat();
    double scale = 1.0, diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
      diff = std::max(diff, std::abs(a[i] - b[i]));
    }
    return diff <= kTau * scale;
  }
}

}  // namespace enlarge
