#pragma once

#include <functional>
#include <optional>

#include "enlarge/ext_real.hpp"
#include "enlarge/gram.hpp"
#include "enlarge/operator.hpp"
#include "enlarge/quad_func.hpp"

namespace enlarge {

/// Closed-form Fitzpatrick function of a monotone linear or affine relation.
///
/// For a linear relation L the supremum over L of
///   <x, y*> + <y, x*> - <y, y*>
/// is the maximum of the concave quadratic a -> a.c - a'Ga (see GramData):
/// ¼ c' G⁺ c when c lies in range(G), +∞ otherwise. An affine relation
/// T = L + t is evaluated as
///   φ_T(p) = φ_L(p - t) + pairing(p, t) - <t, t*>.
/// Construction validates monotonicity once; evaluation is then cheap.
template <Field F>
class FitzpatrickFunction {
 public:
  /// Throws InvalidArgument for finite operators and NotMonotone otherwise.
  explicit FitzpatrickFunction(const Operator<F>& t);

  ExtReal<F> operator()(const PairedPoint<F>& p) const;

  /// φ evaluated on the linear part only (no translation correction).
  ExtReal<F> linear_value(const PairedPoint<F>& p) const;

  /// {p : c(p) ∈ range(G)} for the linear part; contains the linear part.
  Subspace<F> linear_effective_domain() const;

  const PairedPoint<F>& translation() const noexcept { return translation_; }
  std::size_t n() const noexcept { return gram_.relation.n(); }

 private:
  GramData<F> gram_;
  PairedPoint<F> translation_;
};

/// Sampled supremum over the points of a finite operator; a lower bound on φ_T
/// for any T containing the samples.
template <Field F>
ExtReal<F> fitz_finite(const Operator<F>& samples, const PairedPoint<F>& p);

/// φ_T(p) for monotone Linear/Affine T.
template <Field F>
ExtReal<F> fitz_linear(const Operator<F>& t, const PairedPoint<F>& p);

/// ed(φ_T) for a monotone linear relation; equals T iff T is non-enlargeable.
template <Field F>
Subspace<F> effective_domain_fitz(const Subspace<F>& t);

/// -inf over (y,y*) ∈ T of <x-y, x*-y*>, computed directly from the
/// relation: minimizes a -> <a0 - U a, b0 - V a> over the basis coefficients
/// and evaluates the product at the minimizer. +∞ when unbounded below.
template <Field F>
ExtReal<F> enlargement_gap(const Operator<F>& t, const PairedPoint<F>& p);

/// Common float scale for both enlargement routes.
template <Field F>
F membership_scale(const Operator<F>& t, const PairedPoint<F>& p);

/// (x,x*) ∈ T^ε by the defining inequalities <x-y, x*-y*> >= -ε on T.
template <Field F>
bool in_enlargement_def(const Operator<F>& t, const PairedPoint<F>& p, const F& eps);

/// (x,x*) ∈ T^ε via φ_T(x,x*) <= <x,x*> + ε. Rejects finite operators.
template <Field F>
bool in_enlargement_fitz(const Operator<F>& t, const PairedPoint<F>& p, const F& eps);

// ------------------------------------------------------------ quadratics

/// f*(x*) = ½(x*-b)'Q⁺(x*-b) - c when x*-b ∈ range(Q), +∞ otherwise.
template <Field F>
ExtReal<F> conjugate_quad(const QuadFunc<F>& f, const Vec<F>& xstar);

/// f* as a QuadFunc; requires Q nonsingular (InvalidArgument otherwise).
template <Field F>
QuadFunc<F> conjugate_function(const QuadFunc<F>& f);

/// Fenchel-Young function f(x) + f*(x*).
template <Field F>
ExtReal<F> h_fy(const QuadFunc<F>& f, const PairedPoint<F>& p);

/// x* ∈ ∂_ε f(x), i.e. f(x) + f*(x*) <= <x,x*> + ε.
template <Field F>
bool in_eps_subdifferential(const QuadFunc<F>& f, const PairedPoint<F>& p, const F& eps);

/// Graph of x -> Qx + b as an affine relation.
template <Field F>
Operator<F> subdifferential(const QuadFunc<F>& f);

template <Field F>
using PointFunction = std::function<ExtReal<F>(const PairedPoint<F>&)>;

template <Field F>
PointFunction<F> fitz_closure(const Operator<F>& t);

template <Field F>
PointFunction<F> hfy_closure(const QuadFunc<F>& f);

/// Necessary conditions for h ∈ F_T: h >= <x,x*> on every grid point and
/// h = <x,x*> on every sample of T. Convexity and lsc are not checked.
template <Field F>
bool represents_check(const PointFunction<F>& h, const Operator<F>& samples,
                      const std::vector<PairedPoint<F>>& grid);

extern template class FitzpatrickFunction<double>;
extern template class FitzpatrickFunction<Rational>;

}  // namespace enlarge
