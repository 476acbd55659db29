#pragma once

#include <variant>

#include "enlarge/fitzpatrick.hpp"
#include "enlarge/operator.hpp"

namespace enlarge {

/// T = A^⊢ + base_point with A self-cancelling.
template <Field F>
struct NonEnlargeable {
  Subspace<F> pre_dual;
  PairedPoint<F> base_point;
};

/// A point outside T that lies in T^ε for ε = witness_eps. phi_value and
/// duality_value are φ_T and <x, x*> at the witness; their difference is
/// witness_eps.
template <Field F>
struct Enlargeable {
  PairedPoint<F> witness;
  F witness_eps;
  F phi_value;
  F duality_value;
};

template <Field F>
struct Verdict {
  std::variant<NonEnlargeable<F>, Enlargeable<F>> outcome;

  bool non_enlargeable() const noexcept { return outcome.index() == 0; }
  const NonEnlargeable<F>& certificate() const { return std::get<NonEnlargeable<F>>(outcome); }
  const Enlargeable<F>& enlargement() const { return std::get<Enlargeable<F>>(outcome); }
};

enum class SignTag { Plus, Minus, Neither };

std::string_view to_string(SignTag tag) noexcept;

/// φ_T vanishes on T^⊢ (checked on a basis of T^⊢ and on fixed combinations
/// of basis vectors). Throws NotMaximalMonotone.
template <Field F>
bool lemma21_item1_check(const Subspace<F>& t);

/// T ∩ T^⊢, the largest self-cancelling relation inside T. Throws
/// NotMaximalMonotone.
template <Field F>
Subspace<F> max_self_cancelling_part(const Subspace<F>& t);

/// Decides whether a maximal monotone linear/affine T is non-enlargeable.
///
/// With T0 = T - base_point (base_point is the stored translation, or the
/// origin for linear T) and A = T0^⊢: T is non-enlargeable iff A is
/// self-cancelling and A^⊢ = T0. Otherwise A ⊄ T0, and the first canonical
/// basis vector w of A outside T0 is returned as witness (translated back by
/// base_point) with ε = φ_T0(w) - <w> = -<w> > 0, since φ_T0 vanishes on A.
template <Field F>
Verdict<F> decide_non_enlargeable(const Operator<F>& t);

/// A^⊢ + t. Throws NotSelfCancelling, or DualNotMonotone when A^⊢ is not
/// monotone (the caller may retry with the negated relation).
template <Field F>
Operator<F> construct_from_self_cancelling(const Subspace<F>& a, const PairedPoint<F>& t);

/// Plus if D is monotone, Minus if -D is, Neither otherwise.
template <Field F>
SignTag classify_dual_sign(const Subspace<F>& d);

/// Sign under which A^⊢ is maximal monotone, for maximal self-cancelling A.
/// Throws NotMaximalSelfCancelling; a Neither outcome throws Internal.
template <Field F>
SignTag disambiguate_sign(const Subspace<F>& a);

/// For self-cancelling A: whether A^⊢ is monotone (then it is maximal
/// monotone, which is asserted). Throws NotSelfCancelling.
template <Field F>
bool lemma31_shortcut(const Subspace<F>& a);

}  // namespace enlarge
