#pragma once

#include <cstddef>
#include <vector>

#include "enlarge/operator.hpp"

// Brute-force checks used to validate the closed forms. They only evaluate
// the defining expressions at sampled points of the relation.
namespace enlarge::oracle {

struct SampledSup {
  double value = 0.0;          ///< best integrand value seen (a lower bound on φ_T)
  bool unbounded = false;      ///< growth across radii indicates φ_T = +∞
  std::vector<double> radius_maxima;  ///< running maximum after each radius
  std::size_t evaluations = 0;
};

/// Radii of the nested sampling boxes.
inline constexpr double kSampleRadii[] = {1.0, 10.0, 100.0, 1000.0, 10000.0};

/// Maximizes <x,y*> + <y,x*> - <y,y*> over sampled (y,y*) ∈ T.
///
/// Half of the budget goes to Halton points in nested boxes of the relation's
/// coordinate space (orthonormal coordinates, radii kSampleRadii). The result
/// is flagged unbounded when the running maximum's increments grow more than
/// 5x over each of the last two radius steps (linear growth gives ~10x). For
/// bounded integrands the rest of the budget refines the incumbent by
/// three-point parabolic line searches along coordinate and quasi-random
/// directions; every reported value is an actual integrand evaluation.
SampledSup oracle_fitz_sampled(const Operator<double>& t, const PairedPoint<double>& p, std::size_t budget);

/// Brute-force maximality check for linear relations with n <= 2.
///
/// Returns false iff some point of the grid {-r, -r + step, ..., r}^{2n} outside
/// T satisfies <p - b, p* - b*> >= 0 for every sampled b ∈ T; samples cover T's
/// coordinate space along rays out to 8r. Throws DimensionTooLarge for n > 2.
bool oracle_maximality_search(const Operator<double>& t, double grid_radius, double grid_step);

/// {b ∈ T : <b, b*> = 0} for monotone T, computed as the image of the kernel
/// of the restricted symmetric form (no ⊢ involved).
template <Field F>
Subspace<F> zero_duality_locus(const Subspace<F>& t);

/// Radical inverse Halton coordinate: index >= 1, prime base.
double halton(std::size_t index, unsigned base);

}  // namespace enlarge::oracle
