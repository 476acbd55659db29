#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "enlarge/error.hpp"
#include "enlarge/scalar.hpp"

namespace enlarge {

template <Field F>
using Vec = std::vector<F>;

/// Dense row-major matrix. Small sizes only (rows, cols <= 2n <= 16 in practice).
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, ErrorCode::DimensionMismatch, "row length differs from column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec<F> row_vec(std::size_t i) const { return Vec<F>(row(i).begin(), row(i).end()); }

  std::vector<Vec<F>> row_list() const {
    std::vector<Vec<F>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vec(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void append_row(std::span<const F> r) {
    require(cols_ == 0 || r.size() == cols_, ErrorCode::DimensionMismatch, "appended row length");
    if (cols_ == 0) cols_ = r.size();
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Field F>
F dot(std::span<const F> a, std::span<const F> b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <Field F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  return dot<F>(std::span<const F>(a), std::span<const F>(b));
}

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  require(a.cols() == b.rows(), ErrorCode::DimensionMismatch, "matrix product shapes");
  Matrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <Field F>
Vec<F> operator*(const Matrix<F>& a, const Vec<F>& x) {
  require(a.cols() == x.size(), ErrorCode::DimensionMismatch, "matrix-vector shapes");
  Vec<F> y(a.rows(), F(0));
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot<F>(a.row(i), std::span<const F>(x));
  return y;
}

template <Field F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch, "matrix sum shapes");
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <Field F>
Matrix<F> operator-(const Matrix<F>& a) {
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <Field F>
Vec<F> operator+(const Vec<F>& a, const Vec<F>& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector sum lengths");
  Vec<F> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

template <Field F>
Vec<F> operator-(const Vec<F>& a, const Vec<F>& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector difference lengths");
  Vec<F> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

template <Field F>
Vec<F> scaled(const Vec<F>& a, const F& s) {
  Vec<F> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return c;
}

template <Field F>
F max_abs(std::span<const F> v) {
  F m(0);
  for (const F& e : v) {
    F a = abs_value(e);
    if (a > m) m = a;
  }
  return m;
}

template <Field To, Field From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = convert_scalar<To>(m(i, j));
  return out;
}

template <Field To, Field From>
Vec<To> convert_vec(const Vec<From>& v) {
  Vec<To> out;
  out.reserve(v.size());
  for (const From& e : v) out.push_back(convert_scalar<To>(e));
  return out;
}

}  // namespace enlarge
