#include "enlarge/operator.hpp"

#include <algorithm>

namespace enlarge {

std::string_view to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::Finite: return "finite";
    case OperatorKind::Linear: return "linear";
    case OperatorKind::Affine: return "affine";
  }
  return "unknown";
}

template <Field F>
Operator<F> Operator<F>::finite(std::vector<PairedPoint<F>> points) {
  require(!points.empty(), ErrorCode::InvalidArgument, "finite operator needs at least one point");
  const std::size_t n = points.front().dim();
  std::vector<PairedPoint<F>> unique;
  unique.reserve(points.size());
  for (auto& p : points) {
    require(p.dim() == n, ErrorCode::DimensionMismatch, "finite operator points of different dimension");
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  }
  return Operator(n, Finite{std::move(unique)});
}

template <Field F>
Operator<F> Operator<F>::linear(Subspace<F> graph) {
  const std::size_t n = graph.n();
  return Operator(n, Linear{std::move(graph)});
}

template <Field F>
Operator<F> Operator<F>::affine(Subspace<F> graph, PairedPoint<F> translation) {
  require(translation.dim() == graph.n(), ErrorCode::DimensionMismatch, "translation dimension differs from n");
  const std::size_t n = graph.n();
  if (member(graph, translation)) return Operator(n, Linear{std::move(graph)});
  return Operator(n, Affine{std::move(graph), std::move(translation)});
}

template <Field F>
OperatorKind Operator<F>::kind() const noexcept {
  switch (rep_.index()) {
    case 0: return OperatorKind::Finite;
    case 1: return OperatorKind::Linear;
    default: return OperatorKind::Affine;
  }
}

template <Field F>
const std::vector<PairedPoint<F>>& Operator<F>::points() const {
  require(kind() == OperatorKind::Finite, ErrorCode::InvalidArgument, "points() on a non-finite operator");
  return std::get<Finite>(rep_).points;
}

template <Field F>
const Subspace<F>& Operator<F>::linear_part() const {
  if (const auto* l = std::get_if<Linear>(&rep_)) return l->graph;
  if (const auto* a = std::get_if<Affine>(&rep_)) return a->graph;
  fail(ErrorCode::InvalidArgument, "finite operator has no linear part");
}

template <Field F>
PairedPoint<F> Operator<F>::translation() const {
  if (const auto* a = std::get_if<Affine>(&rep_)) return a->translation;
  require(kind() == OperatorKind::Linear, ErrorCode::InvalidArgument, "finite operator has no translation");
  return PairedPoint<F>::zero(n_);
}

template <Field F>
bool Operator<F>::contains_point(const PairedPoint<F>& p) const {
  require(p.dim() == n_, ErrorCode::DimensionMismatch, "point dimension differs from operator");
  if (const auto* f = std::get_if<Finite>(&rep_)) {
    return std::any_of(f->points.begin(), f->points.end(), [&](const auto& q) { return points_close(p, q); });
  }
  return member(linear_part(), p - translation());
}

template <Field F>
bool same_operator(const Operator<F>& a, const Operator<F>& b) {
  if (a.n() != b.n() || a.kind() != b.kind()) return false;
  if (a.is_finite()) {
    const auto& pa = a.points();
    const auto& pb = b.points();
    if (pa.size() != pb.size()) return false;
    return std::all_of(pa.begin(), pa.end(), [&](const auto& p) { return b.contains_point(p); });
  }
  return subspace_equal(a.linear_part(), b.linear_part()) &&
         member(a.linear_part(), a.translation() - b.translation());
}

template <Field F>
bool is_monotone(const Subspace<F>& s) {
  return GramData<F>(s).positive_semidefinite();
}

template <Field F>
bool is_monotone(const Operator<F>& t) {
  if (!t.is_finite()) return is_monotone(t.linear_part());
  const auto& pts = t.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const PairedPoint<F> d = pts[i] - pts[j];
      const F value = duality(d);
      if constexpr (is_exact_v<F>) {
        if (value < 0) return false;
      } else {
        const double scale = std::sqrt(dot(d.x, d.x) * dot(d.xstar, d.xstar));
        if (!approx_le(-value, 0.0, scale)) return false;
      }
    }
  return true;
}

template <Field F>
bool is_maximal_monotone_linear(const Operator<F>& t) {
  require(!t.is_finite(), ErrorCode::InvalidArgument, "maximality is not decidable from finite samples");
  return t.linear_part().dim() == t.n() && is_monotone(t.linear_part());
}

template <Field F>
Operator<F> negate(const Operator<F>& t) {
  switch (t.kind()) {
    case OperatorKind::Finite: {
      std::vector<PairedPoint<F>> pts;
      for (const auto& p : t.points()) pts.push_back(flip_dual(p));
      return Operator<F>::finite(std::move(pts));
    }
    case OperatorKind::Linear:
      return Operator<F>::linear(negate(t.linear_part()));
    case OperatorKind::Affine:
      break;
  }
  return Operator<F>::affine(negate(t.linear_part()), flip_dual(t.translation()));
}

template <Field F>
Operator<F> translate(const Operator<F>& t, const PairedPoint<F>& p) {
  require(p.dim() == t.n(), ErrorCode::DimensionMismatch, "translation dimension differs from operator");
  if (t.is_finite()) {
    std::vector<PairedPoint<F>> pts;
    for (const auto& q : t.points()) pts.push_back(q + p);
    return Operator<F>::finite(std::move(pts));
  }
  return Operator<F>::affine(t.linear_part(), t.translation() + p);
}

template <Field F>
Subspace<F> adjoint(const Subspace<F>& l) {
  return vdash(negate(l));
}

template <Field F>
bool is_skew(const Subspace<F>& l) {
  return subspace_equal(l, negate(adjoint(l)));
}

template <Field F>
bool is_self_cancelling(const Subspace<F>& a) {
  return GramData<F>(a).vanishes();
}

template <Field F>
bool is_maximal_self_cancelling(const Subspace<F>& a) {
  return is_self_cancelling(a) && contains(a, vdash(a));
}

#define ENLARGE_INSTANTIATE(F)                                           \
  template class Operator<F>;                                            \
  template bool same_operator(const Operator<F>&, const Operator<F>&);   \
  template bool is_monotone(const Operator<F>&);                         \
  template bool is_monotone(const Subspace<F>&);                         \
  template bool is_maximal_monotone_linear(const Operator<F>&);          \
  template Operator<F> negate(const Operator<F>&);                       \
  template Operator<F> translate(const Operator<F>&, const PairedPoint<F>&); \
  template Subspace<F> adjoint(const Subspace<F>&);                      \
  template bool is_skew(const Subspace<F>&);                             \
  template bool is_self_cancelling(const Subspace<F>&);                  \
  template bool is_maximal_self_cancelling(const Subspace<F>&);

ENLARGE_INSTANTIATE(double)
ENLARGE_INSTANTIATE(Rational)

}  // namespace enlarge
