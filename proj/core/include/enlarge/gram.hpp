#pragma once

#include "enlarge/subspace.hpp"

namespace enlarge {

/// Parametrization of a linear relation by its basis rows (u_i | v_i).
///
/// For y = sum a_i u_i, y* = sum a_i v_i the Fitzpatrick integrand is
///   <x, y*> + <y, x*> - <y, y*> = a . c(x, x*) - a' G a,
/// with c_i(x, x*) = <x, v_i> + <u_i, x*> and G_ij = (<u_i, v_j> + <u_j, v_i>) / 2.
/// G restricted to the relation is the quadratic form of the duality product,
/// so the relation is monotone exactly when G is positive semidefinite.
template <Field F>
struct GramData {
  Subspace<F> relation;
  Matrix<F> gram;  // k x k symmetric

  explicit GramData(const Subspace<F>& s) : relation(s), gram(s.dim(), s.dim()) {
    const std::size_t k = s.dim();
    const auto pts = s.basis_points();
    for (std::size_t i = 0; i < k; ++i) {
      gram(i, i) = duality(pts[i]);
      for (std::size_t j = i + 1; j < k; ++j) {
        const F g = pairing(pts[i], pts[j]) / F(2);
        gram(i, j) = g;
        gram(j, i) = g;
      }
    }
  }

  /// c(p), one entry per basis row: pairing(basis_i, p).
  Vec<F> coupling(const PairedPoint<F>& p) const {
    require(p.dim() == relation.n(), ErrorCode::DimensionMismatch, "point dimension differs from relation");
    Vec<F> c(relation.dim());
    for (std::size_t i = 0; i < relation.dim(); ++i) c[i] = pairing(relation.basis_point(i), p);
    return c;
  }

  bool positive_semidefinite() const { return linalg::is_psd(gram); }

  bool vanishes() const {
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j)
        if (!is_negligible(gram(i, j), F(1))) return false;
    return true;
  }
};

}  // namespace enlarge
