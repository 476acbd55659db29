#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "enlarge/operator.hpp"

namespace enlarge::test {

using Fields = ::testing::Types<double, Rational>;

template <Field F>
F num(const char* text) {
  return convert_scalar<F>(parse_rational(text));
}

template <Field F>
F num(long v) {
  return F(v);
}

template <Field F>
Vec<F> vec(std::initializer_list<long> v) {
  Vec<F> out;
  for (long e : v) out.push_back(F(e));
  return out;
}

template <Field F>
PairedPoint<F> pt(std::initializer_list<long> x, std::initializer_list<long> xs) {
  return PairedPoint<F>(vec<F>(x), vec<F>(xs));
}

template <Field F>
Matrix<F> mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec<F>> r;
  for (const auto& row : rows) r.push_back(vec<F>(row));
  return Matrix<F>::from_rows(r, r.empty() ? 0 : r.front().size());
}

/// Span of rows of length 2n.
template <Field F>
Subspace<F> sub(std::initializer_list<std::initializer_list<long>> rows, std::size_t n) {
  std::vector<Vec<F>> r;
  for (const auto& row : rows) r.push_back(vec<F>(row));
  return Subspace<F>::span(r, n);
}

template <Field F>
void expect_value(const F& actual, const F& expected, double tol = 1e-9) {
  if constexpr (is_exact_v<F>) {
    EXPECT_EQ(actual, expected);
  } else {
    EXPECT_NEAR(actual, expected, tol * std::max(1.0, std::abs(expected)));
  }
}

#define EXPECT_THROW_CODE(stmt, ec)                                  \
  do {                                                               \
    try {                                                            \
      stmt;                                                          \
      ADD_FAILURE() << "expected " #ec;                              \
    } catch (const ::enlarge::Error& e) {                            \
      EXPECT_EQ(e.code(), ::enlarge::ErrorCode::ec) << e.what();     \
    }                                                                \
  } while (0)

}  // namespace enlarge::test
