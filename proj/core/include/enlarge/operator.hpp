#pragma once

#include <variant>
#include <vector>

#include "enlarge/gram.hpp"
#include "enlarge/subspace.hpp"

namespace enlarge {

enum class OperatorKind { Finite, Linear, Affine };

std::string_view to_string(OperatorKind kind) noexcept;

/// A relation T ⊂ R^n x R^n: a finite sample set, a linear relation (subspace
/// of R^{2n}) or an affine relation (subspace + translation).
///
/// Affine relations whose translation lies in the subspace are stored as
/// Linear. The translation of an Affine relation is kept as given (not reduced
/// modulo the subspace) so that translating by p and then by -p gives back the
/// same representative.
template <Field F>
class Operator {
 public:
  struct Finite {
    std::vector<PairedPoint<F>> points;
  };
  struct Linear {
    Subspace<F> graph;
  };
  struct Affine {
    Subspace<F> graph;
    PairedPoint<F> translation;
  };

  /// Non-empty; exact duplicates are dropped (first occurrence kept).
  static Operator finite(std::vector<PairedPoint<F>> points);
  static Operator linear(Subspace<F> graph);
  static Operator affine(Subspace<F> graph, PairedPoint<F> translation);

  OperatorKind kind() const noexcept;
  std::size_t n() const noexcept { return n_; }
  bool is_finite() const noexcept { return kind() == OperatorKind::Finite; }

  const std::vector<PairedPoint<F>>& points() const;
  const Subspace<F>& linear_part() const;
  /// Zero for Linear relations; throws on Finite.
  PairedPoint<F> translation() const;

  /// Whether p is in the graph.
  bool contains_point(const PairedPoint<F>& p) const;

  const std::variant<Finite, Linear, Affine>& rep() const noexcept { return rep_; }

 private:
  Operator(std::size_t n, std::variant<Finite, Linear, Affine> rep) : n_(n), rep_(std::move(rep)) {}

  std::size_t n_;
  std::variant<Finite, Linear, Affine> rep_;
};

/// Set equality of graphs (finite: same point set; affine: same subspace and
/// translations differing by a subspace element).
template <Field F>
bool same_operator(const Operator<F>& a, const Operator<F>& b);

// ------------------------------------------------------------ predicates

/// Finite: every pair satisfies <x-y, x*-y*> >= 0. Linear/Affine: the
/// duality product restricted to the linear part is positive semidefinite
/// (translations cancel in differences).
template <Field F>
bool is_monotone(const Operator<F>& t);

template <Field F>
bool is_monotone(const Subspace<F>& s);

/// Monotone and dim(linear part) = n. Finite input is rejected
/// (InvalidArgument): samples cannot certify maximality.
template <Field F>
bool is_maximal_monotone_linear(const Operator<F>& t);

template <Field F>
Operator<F> negate(const Operator<F>& t);

template <Field F>
Operator<F> translate(const Operator<F>& t, const PairedPoint<F>& p);

/// L* = (-L)^⊢. For the graph of a matrix M this is the graph of M^T.
template <Field F>
Subspace<F> adjoint(const Subspace<F>& l);

/// L = -L*.
template <Field F>
bool is_skew(const Subspace<F>& l);

/// <x, x*> = 0 on all of A, checked on the basis through polarization.
template <Field F>
bool is_self_cancelling(const Subspace<F>& a);

/// Self-cancelling and A^⊢ ⊂ A (hence A = A^⊢).
template <Field F>
bool is_maximal_self_cancelling(const Subspace<F>& a);

template <Field To, Field From>
Operator<To> convert_operator(const Operator<From>& t) {
  switch (t.kind()) {
    case OperatorKind::Finite: {
      std::vector<PairedPoint<To>> pts;
      for (const auto& p : t.points()) pts.push_back(convert_point<To>(p));
      return Operator<To>::finite(std::move(pts));
    }
    case OperatorKind::Linear:
      return Operator<To>::linear(convert_subspace<To>(t.linear_part()));
    case OperatorKind::Affine:
      break;
  }
  return Operator<To>::affine(convert_subspace<To>(t.linear_part()), convert_point<To>(t.translation()));
}

extern template class Operator<double>;
extern template class Operator<Rational>;

}  // namespace enlarge
