#pragma once

#include <cstdint>
#include <random>

#include "enlarge/operator.hpp"

// Deterministic random instance families. Everything is generated exactly
// (small integer entries) and converted to float by the caller when needed.
namespace enlarge::gen {

using Seed = std::uint64_t;

/// splitmix64-style mixing of a seed with stream identifiers.
Seed derive_seed(Seed seed, std::uint64_t a, std::uint64_t b = 0);

class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool coin() { return uniform_int(0, 1) == 1; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// S = R - R' with R strictly upper triangular, entries of S in [-bound, bound].
Matrix<Rational> gen_skew_matrix(std::size_t n, Seed seed, int bound = 5);
/// Graph of gen_skew_matrix.
Subspace<Rational> gen_skew(std::size_t n, Seed seed, int bound = 5);
/// A'A for a random r x n integer A, r in [1, n]; never zero.
Matrix<Rational> gen_psd(std::size_t n, Seed seed, int bound = 2);
/// gen_skew_matrix + gen_psd with independent streams.
Matrix<Rational> gen_mixed(std::size_t n, Seed seed);
/// {0} x R^n.
Subspace<Rational> gen_vertical(std::size_t n);

/// {(x, Mx + z) : x ∈ W, z ∈ W^perp} for random W and M = S + Q. Always
/// maximal monotone; W = R^n gives the graph of M.
Subspace<Rational> gen_maximal_monotone(std::size_t n, Seed seed);
/// Same construction with Q = 0: a maximal self-cancelling (skew) relation.
Subspace<Rational> gen_max_self_cancelling(std::size_t n, Seed seed);
/// A k-dimensional subspace of a random maximal self-cancelling relation.
Subspace<Rational> gen_self_cancelling(std::size_t n, std::size_t k, Seed seed);
/// A random subspace (possibly all) of a maximal monotone relation.
Subspace<Rational> gen_monotone(std::size_t n, Seed seed);
/// Maximal monotone relation, or a sub-relation of one, with entries in
/// {-2..2}: sized for the grid-search maximality oracle.
Subspace<Rational> gen_small_monotone(std::size_t n, Seed seed);
/// Random k-dimensional subspace of s from integer combinations of its basis.
Subspace<Rational> gen_subspace_of(const Subspace<Rational>& s, std::size_t k, Seed seed);
/// Uniformly random subspace of R^{2n} of random dimension.
Subspace<Rational> gen_subspace(std::size_t n, Seed seed);
/// Point with entries in {k/denominator : |k| <= bound * denominator}.
PairedPoint<Rational> gen_point(std::size_t n, Seed seed, int bound = 5, int denominator = 2);

}  // namespace enlarge::gen
