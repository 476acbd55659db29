#include "enlarge/subspace.hpp"

namespace enlarge {

template <Field F>
Subspace<F> Subspace<F>::span(const Matrix<F>& rows, std::size_t n) {
  require(rows.rows() == 0 || rows.cols() == 2 * n, ErrorCode::DimensionMismatch,
          "vectors must have length 2n = " + std::to_string(2 * n));
  if (rows.rows() == 0) return Subspace(n);
  return Subspace(n, linalg::row_basis(rows));
}

template <Field F>
Subspace<F> Subspace<F>::span(const std::vector<Vec<F>>& vectors, std::size_t n) {
  Matrix<F> m(0, 2 * n);
  for (const auto& v : vectors) {
    require(v.size() == 2 * n, ErrorCode::DimensionMismatch,
            "vector of length " + std::to_string(v.size()) + " where 2n = " + std::to_string(2 * n));
    m.append_row(v);
  }
  return span(m, n);
}

template <Field F>
Subspace<F> Subspace<F>::span_points(const std::vector<PairedPoint<F>>& points, std::size_t n) {
  std::vector<Vec<F>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    require(p.dim() == n, ErrorCode::DimensionMismatch, "point dimension differs from n");
    rows.push_back(p.concat());
  }
  return span(rows, n);
}

template <Field F>
Subspace<F> Subspace<F>::whole(std::size_t n) {
  return Subspace(n, linalg::row_basis(Matrix<F>::identity(2 * n)));
}

template <Field F>
Subspace<F> Subspace<F>::graph(const Matrix<F>& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "graph of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> rows(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rows(i, i) = F(1);
    for (std::size_t j = 0; j < n; ++j) rows(i, n + j) = m(j, i);  // (e_i | M e_i)
  }
  return span(rows, n);
}

template <Field F>
Subspace<F> Subspace<F>::vertical(std::size_t n) {
  Matrix<F> rows(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) rows(i, n + i) = F(1);
  return span(rows, n);
}

template <Field F>
std::vector<PairedPoint<F>> Subspace<F>::basis_points() const {
  std::vector<PairedPoint<F>> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_point(i));
  return out;
}

namespace {

template <Field F>
void check_same_space(const Subspace<F>& a, const Subspace<F>& b) {
  require(a.n() == b.n(), ErrorCode::DimensionMismatch,
          "subspaces of R^" + std::to_string(a.ambient()) + " and R^" + std::to_string(b.ambient()));
}

}  // namespace

template <Field F>
Subspace<F> vdash(const Subspace<F>& b) {
  const std::size_t n = b.n();
  Matrix<F> swapped(b.dim(), 2 * n);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      swapped(i, j) = b.basis()(i, n + j);
      swapped(i, n + j) = b.basis()(i, j);
    }
  return Subspace<F>::span(linalg::kernel(swapped, 2 * n), n);
}

template <Field F>
Subspace<F> orthogonal_complement(const Subspace<F>& s) {
  return Subspace<F>::span(linalg::kernel(s.basis(), s.ambient()), s.n());
}

template <Field F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  check_same_space(a, b);
  // (A^perp + B^perp)^perp
  Matrix<F> stacked = orthogonal_complement(a).basis();
  const Subspace<F> ob = orthogonal_complement(b);
  const Matrix<F>& cb = ob.basis();
  for (std::size_t i = 0; i < cb.rows(); ++i) stacked.append_row(cb.row(i));
  return Subspace<F>::span(linalg::kernel(stacked, a.ambient()), a.n());
}

template <Field F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  check_same_space(a, b);
  Matrix<F> stacked = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
  return Subspace<F>::span(stacked, a.n());
}

template <Field F>
bool contains(const Subspace<F>& outer, const Subspace<F>& inner) {
  check_same_space(outer, inner);
  if (inner.dim() > outer.dim()) return false;
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!linalg::in_row_span(outer.basis(), inner.basis().row(i))) return false;
  return true;
}

template <Field F>
bool subspace_equal(const Subspace<F>& a, const Subspace<F>& b) {
  check_same_space(a, b);
  if (a.dim() != b.dim()) return false;
  if constexpr (is_exact_v<F>) {
    return a == b;
  } else {
    return contains(a, b) && contains(b, a);
  }
}

template <Field F>
bool member(const Subspace<F>& s, const PairedPoint<F>& p) {
  require(p.dim() == s.n(), ErrorCode::DimensionMismatch, "point dimension differs from subspace n");
  const Vec<F> v = p.concat();
  return linalg::in_row_span(s.basis(), std::span<const F>(v));
}

template <Field F>
Subspace<F> negate(const Subspace<F>& s) {
  const std::size_t n = s.n();
  Matrix<F> rows = s.basis();
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = n; j < 2 * n; ++j) rows(i, j) = -rows(i, j);
  return Subspace<F>::span(rows, n);
}

#define ENLARGE_INSTANTIATE(F)                                                  \
  template class Subspace<F>;                                                   \
  template Subspace<F> vdash(const Subspace<F>&);                               \
  template Subspace<F> orthogonal_complement(const Subspace<F>&);               \
  template Subspace<F> intersect(const Subspace<F>&, const Subspace<F>&);       \
  template Subspace<F> sum(const Subspace<F>&, const Subspace<F>&);             \
  template bool contains(const Subspace<F>&, const Subspace<F>&);               \
  template bool subspace_equal(const Subspace<F>&, const Subspace<F>&);         \
  template bool member(const Subspace<F>&, const PairedPoint<F>&);              \
  template Subspace<F> negate(const Subspace<F>&);

ENLARGE_INSTANTIATE(double)
ENLARGE_INSTANTIATE(Rational)

}  // namespace enlarge
