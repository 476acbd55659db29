#pragma once

#include <cstddef>
#include <vector>

#include "enlarge/linalg.hpp"
#include "enlarge/paired_point.hpp"

namespace enlarge {

/// Linear subspace of R^{2n} = R^n x R^n, stored by a canonical basis of
/// concatenated (x | x*) rows. Exact mode: RREF, so structural equality is set
/// equality. Float mode: orthonormal rows, and equality is mutual containment.
template <Field F>
class Subspace {
 public:
  /// Zero subspace of R^{2n}.
  explicit Subspace(std::size_t n = 0) : n_(n), basis_(0, 2 * n) {}

  /// Span of arbitrary (possibly dependent) rows of length 2n.
  static Subspace span(const std::vector<Vec<F>>& vectors, std::size_t n);
  static Subspace span(const Matrix<F>& rows, std::size_t n);
  static Subspace span_points(const std::vector<PairedPoint<F>>& points, std::size_t n);
  static Subspace whole(std::size_t n);
  /// {(x, Mx)} for a square matrix M.
  static Subspace graph(const Matrix<F>& m);
  /// {0} x R^n, the normal cone of the origin.
  static Subspace vertical(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t ambient() const noexcept { return 2 * n_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix<F>& basis() const noexcept { return basis_; }
  PairedPoint<F> basis_point(std::size_t i) const { return PairedPoint<F>::from_concat(basis_.row(i)); }
  std::vector<PairedPoint<F>> basis_points() const;

  /// Structural equality of canonical bases (exact mode: set equality).
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t n, Matrix<F> canonical) : n_(n), basis_(std::move(canonical)) {}

  std::size_t n_;
  Matrix<F> basis_;
};

/// canonicalize(vectors, n): span in canonical form. Throws DimensionMismatch.
template <Field F>
Subspace<F> canonicalize(const std::vector<Vec<F>>& vectors, std::size_t n) {
  return Subspace<F>::span(vectors, n);
}

/// B^⊢ = {q : pairing(b, q) = 0 for all b in B}: the kernel of B's basis
/// with the x and x* blocks swapped. dim B + dim B^⊢ = 2n.
template <Field F>
Subspace<F> vdash(const Subspace<F>& b);

template <Field F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b);

template <Field F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b);

/// Whether `inner` is a subset of `outer`.
template <Field F>
bool contains(const Subspace<F>& outer, const Subspace<F>& inner);

template <Field F>
bool subspace_equal(const Subspace<F>& a, const Subspace<F>& b);

template <Field F>
bool member(const Subspace<F>& s, const PairedPoint<F>& p);

/// Euclidean orthogonal complement (plumbing for intersections and oracles).
template <Field F>
Subspace<F> orthogonal_complement(const Subspace<F>& s);

/// {(x, -x*)} applied to every element.
template <Field F>
Subspace<F> negate(const Subspace<F>& s);

template <Field To, Field From>
Subspace<To> convert_subspace(const Subspace<From>& s) {
  return Subspace<To>::span(convert_matrix<To>(s.basis()), s.n());
}

extern template class Subspace<double>;
extern template class Subspace<Rational>;

}  // namespace enlarge
