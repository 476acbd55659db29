#pragma once

#include "enlarge/ext_real.hpp"
#include "enlarge/matrix.hpp"

namespace enlarge {

/// f(x) = ½ x'Qx + b'x + c with Q symmetric positive semidefinite.
template <Field F>
class QuadFunc {
 public:
  /// Throws NotConvex when Q is not symmetric (within tau) or not PSD.
  QuadFunc(Matrix<F> q, Vec<F> b, F c);

  /// ½|x|^2 + 0 on R^n.
  static QuadFunc half_norm_squared(std::size_t n);

  std::size_t n() const noexcept { return b_.size(); }
  const Matrix<F>& q() const noexcept { return q_; }
  const Vec<F>& b() const noexcept { return b_; }
  const F& c() const noexcept { return c_; }

  F operator()(const Vec<F>& x) const;
  Vec<F> gradient(const Vec<F>& x) const;

 private:
  Matrix<F> q_;
  Vec<F> b_;
  F c_;
};

extern template class QuadFunc<double>;
extern template class QuadFunc<Rational>;

}  // namespace enlarge
