#include "enlarge/quad_func.hpp"

#include "enlarge/linalg.hpp"

namespace enlarge {

template <Field F>
QuadFunc<F>::QuadFunc(Matrix<F> q, Vec<F> b, F c) : q_(std::move(q)), b_(std::move(b)), c_(std::move(c)) {
  require(q_.rows() == q_.cols() && q_.rows() == b_.size(), ErrorCode::DimensionMismatch,
          "Q must be n x n with b of length n");
  const std::size_t n = b_.size();
  F scale(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (abs_value(q_(i, j)) > scale) scale = abs_value(q_(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(is_negligible(F(q_(i, j) - q_(j, i)), scale), ErrorCode::NotConvex,
              "Q is not symmetric");
  require(linalg::is_psd(q_), ErrorCode::NotConvex, "Q is not positive semidefinite");
}

template <Field F>
QuadFunc<F> QuadFunc<F>::half_norm_squared(std::size_t n) {
  return QuadFunc(Matrix<F>::identity(n), Vec<F>(n, F(0)), F(0));
}

template <Field F>
F QuadFunc<F>::operator()(const Vec<F>& x) const {
  require(x.size() == n(), ErrorCode::DimensionMismatch, "argument length differs from n");
  const Vec<F> qx = q_ * x;
  return dot(x, qx) / F(2) + dot(b_, x) + c_;
}

template <Field F>
Vec<F> QuadFunc<F>::gradient(const Vec<F>& x) const {
  require(x.size() == n(), ErrorCode::DimensionMismatch, "argument length differs from n");
  return q_ * x + b_;
}

template class QuadFunc<double>;
template class QuadFunc<Rational>;

}  // namespace enlarge
