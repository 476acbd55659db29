#include "enlarge/fitzpatrick.hpp"

#include <algorithm>

namespace enlarge {

template <Field F>
FitzpatrickFunction<F>::FitzpatrickFunction(const Operator<F>& t)
    : gram_(t.is_finite() ? Subspace<F>(t.n()) : t.linear_part()),
      translation_(t.is_finite() ? PairedPoint<F>::zero(t.n()) : t.translation()) {
  require(!t.is_finite(), ErrorCode::InvalidArgument,
          "closed-form Fitzpatrick function needs a linear or affine relation");
  require(gram_.positive_semidefinite(), ErrorCode::NotMonotone, "relation is not monotone");
}

template <Field F>
ExtReal<F> FitzpatrickFunction<F>::linear_value(const PairedPoint<F>& p) const {
  const Vec<F> c = gram_.coupling(p);
  const auto z = linalg::solve_in_range(gram_.gram, c);
  if (!z) return ExtReal<F>::plus_inf();
  return ExtReal<F>(F(dot(c, *z) / F(4)));
}

template <Field F>
ExtReal<F> FitzpatrickFunction<F>::operator()(const PairedPoint<F>& p) const {
  require(p.dim() == n(), ErrorCode::DimensionMismatch, "point dimension differs from relation");
  if (translation_.is_zero()) return linear_value(p);
  const ExtReal<F> base = linear_value(p - translation_);
  if (!base.is_finite()) return base;
  return ExtReal<F>(F(base.value() + pairing(p, translation_) - duality(translation_)));
}

template <Field F>
Subspace<F> FitzpatrickFunction<F>::linear_effective_domain() const {
  const Subspace<F>& rel = gram_.relation;
  const std::size_t n = rel.n();
  const std::size_t k = rel.dim();
  if (k == 0) return Subspace<F>::whole(n);
  const Matrix<F> null_dirs = linalg::kernel(gram_.gram, k);
  if (null_dirs.rows() == 0) return Subspace<F>::whole(n);
  // c_i(p) = pairing(b_i, p) is the row (b_i* | b_i) applied to p
  Matrix<F> coupling_rows(k, 2 * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      coupling_rows(i, j) = rel.basis()(i, n + j);
      coupling_rows(i, n + j) = rel.basis()(i, j);
    }
  return Subspace<F>::span(linalg::kernel(null_dirs * coupling_rows, 2 * n), n);
}

template <Field F>
ExtReal<F> fitz_finite(const Operator<F>& samples, const PairedPoint<F>& p) {
  require(samples.is_finite(), ErrorCode::InvalidArgument, "fitz_finite needs a finite operator");
  require(p.dim() == samples.n(), ErrorCode::DimensionMismatch, "point dimension differs from samples");
  std::optional<F> best;
  for (const auto& y : samples.points()) {
    F v = pairing(p, y) - duality(y);
    if (!best || v > *best) best = std::move(v);
  }
  return ExtReal<F>(*best);
}

template <Field F>
ExtReal<F> fitz_linear(const Operator<F>& t, const PairedPoint<F>& p) {
  return FitzpatrickFunction<F>(t)(p);
}

template <Field F>
Subspace<F> effective_domain_fitz(const Subspace<F>& t) {
  return FitzpatrickFunction<F>(Operator<F>::linear(t)).linear_effective_domain();
}

template <Field F>
ExtReal<F> enlargement_gap(const Operator<F>& t, const PairedPoint<F>& p) {
  require(p.dim() == t.n(), ErrorCode::DimensionMismatch, "point dimension differs from operator");
  if (t.is_finite()) {
    std::optional<F> worst;
    for (const auto& y : t.points()) {
      F v = -duality(PairedPoint<F>(p - y));
      if (!worst || v > *worst) worst = std::move(v);
    }
    return ExtReal<F>(*worst);
  }
  const Subspace<F>& rel = t.linear_part();
  const PairedPoint<F> shifted = p - t.translation();
  const std::size_t k = rel.dim();
  if (k == 0) return ExtReal<F>(F(-duality(shifted)));
  const auto basis = rel.basis_points();
  // <a - U a, b - V a> = <a,b> - g.a + ½ a' H a with H = U'V + V'U, g = U'b + V'a
  Matrix<F> hess(k, k);
  Vec<F> grad(k);
  for (std::size_t i = 0; i < k; ++i) {
    grad[i] = dot(basis[i].x, shifted.xstar) + dot(basis[i].xstar, shifted.x);
    for (std::size_t j = 0; j < k; ++j) hess(i, j) = dot(basis[i].x, basis[j].xstar) + dot(basis[j].x, basis[i].xstar);
  }
  if (!linalg::is_psd(hess)) return ExtReal<F>::plus_inf();
  const auto alpha = linalg::solve_in_range(hess, grad);
  if (!alpha) return ExtReal<F>::plus_inf();
  PairedPoint<F> y = PairedPoint<F>::zero(t.n());
  for (std::size_t i = 0; i < k; ++i) y = y + (*alpha)[i] * basis[i];
  return ExtReal<F>(F(-duality(PairedPoint<F>(shifted - y))));
}

template <Field F>
F membership_scale(const Operator<F>& t, const PairedPoint<F>& p) {
  F s = F(1) + abs_value(duality(p));
  if (!t.is_finite()) s += abs_value(duality(PairedPoint<F>(p - t.translation())));
  return s;
}

namespace {

template <Field F>
void check_eps(const F& eps) {
  require(eps >= 0, ErrorCode::NegativeEpsilon, "epsilon must be nonnegative, got " + format_scalar(eps));
}

}  // namespace

template <Field F>
bool in_enlargement_def(const Operator<F>& t, const PairedPoint<F>& p, const F& eps) {
  check_eps(eps);
  const ExtReal<F> gap = enlargement_gap(t, p);
  if (!gap.is_finite()) return gap.is_minus_inf();
  return approx_le(gap.value(), eps, membership_scale(t, p));
}

template <Field F>
bool in_enlargement_fitz(const Operator<F>& t, const PairedPoint<F>& p, const F& eps) {
  check_eps(eps);
  require(!t.is_finite(), ErrorCode::InvalidArgument,
          "sampled Fitzpatrick values underestimate φ_T; use in_enlargement_def for finite operators");
  const ExtReal<F> phi = fitz_linear(t, p);
  if (!phi.is_finite()) return false;
  return approx_le(F(phi.value() - duality(p)), eps, membership_scale(t, p));
}

template <Field F>
ExtReal<F> conjugate_quad(const QuadFunc<F>& f, const Vec<F>& xstar) {
  require(xstar.size() == f.n(), ErrorCode::DimensionMismatch, "x* length differs from n");
  const Vec<F> d = xstar - f.b();
  const auto z = linalg::solve_in_range(f.q(), d);
  if (!z) return ExtReal<F>::plus_inf();
  return ExtReal<F>(F(dot(d, *z) / F(2) - f.c()));
}

template <Field F>
QuadFunc<F> conjugate_function(const QuadFunc<F>& f) {
  const std::size_t n = f.n();
  require(linalg::rank(f.q()) == n, ErrorCode::InvalidArgument, "conjugate_function needs nonsingular Q");
  Matrix<F> inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec<F> e(n, F(0));
    e[j] = F(1);
    const auto col = linalg::solve_in_range(f.q(), e);
    require(col.has_value(), ErrorCode::Internal, "nonsingular Q without an inverse column");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  // symmetrize away rounding so the result passes the QuadFunc checks
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const F avg = (inv(i, j) + inv(j, i)) / F(2);
      inv(i, j) = avg;
      inv(j, i) = avg;
    }
  // ½(s-b)'Q⁻¹(s-b) - c = ½ s'Q⁻¹s - (Q⁻¹b)'s + ½ b'Q⁻¹b - c
  const Vec<F> qib = inv * f.b();
  return QuadFunc<F>(inv, scaled(qib, F(-1)), F(dot(f.b(), qib) / F(2) - f.c()));
}

template <Field F>
ExtReal<F> h_fy(const QuadFunc<F>& f, const PairedPoint<F>& p) {
  require(p.dim() == f.n(), ErrorCode::DimensionMismatch, "point dimension differs from n");
  return ExtReal<F>(f(p.x)) + conjugate_quad(f, p.xstar);
}

template <Field F>
bool in_eps_subdifferential(const QuadFunc<F>& f, const PairedPoint<F>& p, const F& eps) {
  check_eps(eps);
  const ExtReal<F> h = h_fy(f, p);
  if (!h.is_finite()) return false;
  const F dp = duality(p);
  return approx_le(F(h.value() - dp), eps, F(F(1) + abs_value(dp) + abs_value(f(p.x))));
}

template <Field F>
Operator<F> subdifferential(const QuadFunc<F>& f) {
  return Operator<F>::affine(Subspace<F>::graph(f.q()), PairedPoint<F>(Vec<F>(f.n(), F(0)), f.b()));
}

template <Field F>
PointFunction<F> fitz_closure(const Operator<F>& t) {
  return [phi = FitzpatrickFunction<F>(t)](const PairedPoint<F>& p) { return phi(p); };
}

template <Field F>
PointFunction<F> hfy_closure(const QuadFunc<F>& f) {
  return [f](const PairedPoint<F>& p) { return h_fy(f, p); };
}

template <Field F>
bool represents_check(const PointFunction<F>& h, const Operator<F>& samples, const std::vector<PairedPoint<F>>& grid) {
  require(samples.is_finite(), ErrorCode::InvalidArgument, "represents_check takes finite samples of T");
  for (const auto& p : grid) {
    const ExtReal<F> v = h(p);
    if (v.is_plus_inf()) continue;
    if (v.is_minus_inf()) return false;
    const F dp = duality(p);
    if (!approx_le(dp, v.value(), dp)) return false;
  }
  for (const auto& s : samples.points()) {
    const ExtReal<F> v = h(s);
    if (!v.is_finite()) return false;
    const F dp = duality(s);
    if (!is_negligible(F(v.value() - dp), F(F(1) + abs_value(dp)))) return false;
  }
  return true;
}

#define ENLARGE_INSTANTIATE(F)                                                                  \
  template class FitzpatrickFunction<F>;                                                        \
  template ExtReal<F> fitz_finite(const Operator<F>&, const PairedPoint<F>&);                   \
  template ExtReal<F> fitz_linear(const Operator<F>&, const PairedPoint<F>&);                   \
  template Subspace<F> effective_domain_fitz(const Subspace<F>&);                               \
  template ExtReal<F> enlargement_gap(const Operator<F>&, const PairedPoint<F>&);               \
  template F membership_scale(const Operator<F>&, const PairedPoint<F>&);                       \
  template bool in_enlargement_def(const Operator<F>&, const PairedPoint<F>&, const F&);        \
  template bool in_enlargement_fitz(const Operator<F>&, const PairedPoint<F>&, const F&);       \
  template ExtReal<F> conjugate_quad(const QuadFunc<F>&, const Vec<F>&);                        \
  template QuadFunc<F> conjugate_function(const QuadFunc<F>&);                                  \
  template ExtReal<F> h_fy(const QuadFunc<F>&, const PairedPoint<F>&);                          \
  template bool in_eps_subdifferential(const QuadFunc<F>&, const PairedPoint<F>&, const F&);    \
  template Operator<F> subdifferential(const QuadFunc<F>&);                                     \
  template PointFunction<F> fitz_closure(const Operator<F>&);                                   \
  template PointFunction<F> hfy_closure(const QuadFunc<F>&);                                    \
  template bool represents_check(const PointFunction<F>&, const Operator<F>&,                   \
                                 const std::vector<PairedPoint<F>>&);

ENLARGE_INSTANTIATE(double)
ENLARGE_INSTANTIATE(Rational)

}  // namespace enlarge
