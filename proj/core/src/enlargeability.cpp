#include "enlarge/enlargeability.hpp"

namespace enlarge {

std::string_view to_string(SignTag tag) noexcept {
  switch (tag) {
    case SignTag::Plus: return "plus";
    case SignTag::Minus: return "minus";
    case SignTag::Neither: return "neither";
  }
  return "unknown";
}

namespace {

template <Field F>
void require_maximal(const Operator<F>& t) {
  require(!t.is_finite(), ErrorCode::InvalidArgument, "finite samples do not determine a maximal monotone operator");
  require(is_maximal_monotone_linear(t), ErrorCode::NotMaximalMonotone, "operator is not maximal monotone");
}

template <Field F>
F squared_norm(const PairedPoint<F>& p) {
  return dot(p.x, p.x) + dot(p.xstar, p.xstar);
}

}  // namespace

template <Field F>
bool lemma21_item1_check(const Subspace<F>& t) {
  const Operator<F> op = Operator<F>::linear(t);
  require_maximal(op);
  const FitzpatrickFunction<F> phi(op);
  const auto pts = vdash(t).basis_points();
  std::vector<PairedPoint<F>> probes = pts;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    probes.push_back(pts[i] + pts[i + 1]);
    probes.push_back(pts[i] - F(2) * pts[i + 1]);
  }
  for (const auto& b : probes) {
    const ExtReal<F> v = phi(b);
    if (!v.is_finite() || !is_negligible(v.value(), F(F(1) + squared_norm(b)))) return false;
  }
  return true;
}

template <Field F>
Subspace<F> max_self_cancelling_part(const Subspace<F>& t) {
  require_maximal(Operator<F>::linear(t));
  Subspace<F> part = intersect(t, vdash(t));
  ENLARGE_ENSURE(is_self_cancelling(part), "T ∩ T^⊢ is not self-cancelling");
  return part;
}

template <Field F>
Verdict<F> decide_non_enlargeable(const Operator<F>& t) {
  require_maximal(t);
  const PairedPoint<F> base = t.translation();
  const Subspace<F>& t0 = t.linear_part();
  Subspace<F> a = vdash(t0);
  if (is_self_cancelling(a) && subspace_equal(vdash(a), t0)) {
    ENLARGE_ENSURE(subspace_equal(effective_domain_fitz(t0), t0), "non-enlargeable T with ed(φ_T) != T");
    return Verdict<F>{NonEnlargeable<F>{std::move(a), base}};
  }
  const FitzpatrickFunction<F> phi0(Operator<F>::linear(t0));
  for (const auto& w : a.basis_points()) {
    if (member(t0, w)) continue;
    const ExtReal<F> phi_w = phi0(w);
    ENLARGE_ENSURE(phi_w.is_finite(), "φ_T infinite on T^⊢");
    const F eps = phi_w.value() - duality(w);
    PairedPoint<F> witness = w + base;
    const ExtReal<F> phi_t = FitzpatrickFunction<F>(t)(witness);
    ENLARGE_ENSURE(phi_t.is_finite(), "φ_T infinite at the translated witness");
    ENLARGE_ENSURE(eps > 0, "witness gap is not positive");
    ENLARGE_ENSURE(member(effective_domain_fitz(t0), w), "witness outside ed(φ_T)");
    ENLARGE_ENSURE(in_enlargement_def(t, witness, eps) && !t.contains_point(witness),
                   "witness does not certify enlargeability");
    F dval = duality(witness);
    return Verdict<F>{Enlargeable<F>{std::move(witness), eps, phi_t.value(), std::move(dval)}};
  }
  fail(ErrorCode::Internal, "T^⊢ ⊂ T but T^⊢ is not a self-cancelling pre-dual of T");
}

template <Field F>
Operator<F> construct_from_self_cancelling(const Subspace<F>& a, const PairedPoint<F>& t) {
  require(t.dim() == a.n(), ErrorCode::DimensionMismatch, "translation dimension differs from n");
  require(is_self_cancelling(a), ErrorCode::NotSelfCancelling, "A is not self-cancelling");
  Subspace<F> dual = vdash(a);
  require(is_monotone(dual), ErrorCode::DualNotMonotone, "A^⊢ is not monotone");
  Operator<F> op = Operator<F>::affine(std::move(dual), t);
  ENLARGE_ENSURE(is_maximal_monotone_linear(op), "monotone A^⊢ is not maximal monotone");
  ENLARGE_ENSURE(decide_non_enlargeable(op).non_enlargeable(), "A^⊢ + t classified as enlargeable");
  return op;
}

template <Field F>
SignTag classify_dual_sign(const Subspace<F>& d) {
  if (is_monotone(d)) return SignTag::Plus;
  if (is_monotone(negate(d))) return SignTag::Minus;
  return SignTag::Neither;
}

template <Field F>
SignTag disambiguate_sign(const Subspace<F>& a) {
  require(is_maximal_self_cancelling(a), ErrorCode::NotMaximalSelfCancelling, "A is not maximal self-cancelling");
  const SignTag tag = classify_dual_sign(vdash(a));
  if (tag == SignTag::Neither)
    fail(ErrorCode::Internal, "neither A^⊢ nor -A^⊢ is monotone for maximal self-cancelling A");
  return tag;
}

template <Field F>
bool lemma31_shortcut(const Subspace<F>& a) {
  require(is_self_cancelling(a), ErrorCode::NotSelfCancelling, "A is not self-cancelling");
  const Subspace<F> dual = vdash(a);
  const bool monotone = is_monotone(dual);
  if (monotone) ENLARGE_ENSURE(dual.dim() == a.n(), "monotone A^⊢ does not have dimension n");
  return monotone;
}

#define ENLARGE_INSTANTIATE(F)                                                              \
  template bool lemma21_item1_check(const Subspace<F>&);                                    \
  template Subspace<F> max_self_cancelling_part(const Subspace<F>&);                        \
  template Verdict<F> decide_non_enlargeable(const Operator<F>&);                           \
  template Operator<F> construct_from_self_cancelling(const Subspace<F>&, const PairedPoint<F>&); \
  template SignTag classify_dual_sign(const Subspace<F>&);                                  \
  template SignTag disambiguate_sign(const Subspace<F>&);                                   \
  template bool lemma31_shortcut(const Subspace<F>&);

ENLARGE_INSTANTIATE(double)
ENLARGE_INSTANTIATE(Rational)

}  // namespace enlarge
