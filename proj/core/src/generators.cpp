#include "enlarge/generators.hpp"

#include <algorithm>
#include <numeric>

namespace enlarge::gen {
namespace {

void check_n(std::size_t n) {
  require(n >= 1 && n <= 8, ErrorCode::InvalidArgument, "generator dimension must satisfy 1 <= n <= 8");
}

Vec<Rational> random_int_vector(Rng& rng, std::size_t len, int bound) {
  Vec<Rational> v(len);
  for (auto& e : v) e = rng.uniform_int(-bound, bound);
  return v;
}

// Scales a rational row to coprime integers.
Vec<Rational> integral(const Vec<Rational>& v) {
  mpz_class l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
  Vec<Rational> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& e : v) {
    Rational s = e * l;
    out.push_back(s);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& e : out) e /= Rational(g);
  return out;
}

// Random subspace W ⊂ R^n of dimension w, given by integer basis rows, plus an
// integer basis of W^perp.
struct SplitBasis {
  std::vector<Vec<Rational>> w;
  std::vector<Vec<Rational>> w_perp;
};

SplitBasis random_split(Rng& rng, std::size_t n, std::size_t w, int bound) {
  SplitBasis out;
  if (w == n) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec<Rational> e(n, Rational(0));
      e[i] = 1;
      out.w.push_back(e);
    }
    return out;
  }
  Matrix<Rational> rows(0, n);
  while (out.w.size() < w) {
    Vec<Rational> v = random_int_vector(rng, n, bound);
    Matrix<Rational> trial = rows;
    trial.append_row(v);
    if (linalg::rank(trial) == trial.rows()) {
      rows = trial;
      out.w.push_back(v);
    }
  }
  const Matrix<Rational> perp = linalg::kernel(rows, n);
  for (std::size_t i = 0; i < perp.rows(); ++i) out.w_perp.push_back(integral(perp.row_vec(i)));
  return out;
}

Subspace<Rational> split_relation(const SplitBasis& split, const Matrix<Rational>& m, std::size_t n) {
  std::vector<Vec<Rational>> rows;
  for (const auto& x : split.w) {
    Vec<Rational> r = x;
    const Vec<Rational> mx = m * x;
    r.insert(r.end(), mx.begin(), mx.end());
    rows.push_back(r);
  }
  for (const auto& z : split.w_perp) {
    Vec<Rational> r(n, Rational(0));
    r.insert(r.end(), z.begin(), z.end());
    rows.push_back(r);
  }
  return Subspace<Rational>::span(rows, n);
}

// Random k-dimensional subspace of s (k <= dim s) from integer combinations.
Subspace<Rational> random_subspace_of(Rng& rng, const Subspace<Rational>& s, std::size_t k, int bound) {
  require(k <= s.dim(), ErrorCode::InvalidArgument, "sub-relation dimension exceeds dimension");
  if (k == s.dim()) return s;
  const std::size_t n = s.n();
  while (true) {
    std::vector<Vec<Rational>> rows;
    for (std::size_t j = 0; j < k; ++j) {
      Vec<Rational> v(2 * n, Rational(0));
      for (std::size_t i = 0; i < s.dim(); ++i) {
        const Rational c = rng.uniform_int(-bound, bound);
        for (std::size_t c2 = 0; c2 < 2 * n; ++c2) v[c2] += c * s.basis()(i, c2);
      }
      rows.push_back(v);
    }
    Subspace<Rational> sub = Subspace<Rational>::span(rows, n);
    if (sub.dim() == k) return sub;
  }
}

}  // namespace

Seed derive_seed(Seed seed, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

Matrix<Rational> gen_skew_matrix(std::size_t n, Seed seed, int bound) {
  check_n(n);
  Rng rng(derive_seed(seed, 1));
  Matrix<Rational> s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = rng.uniform_int(-bound, bound);
      s(j, i) = -s(i, j);
    }
  return s;
}

Subspace<Rational> gen_skew(std::size_t n, Seed seed, int bound) {
  return Subspace<Rational>::graph(gen_skew_matrix(n, seed, bound));
}

Matrix<Rational> gen_psd(std::size_t n, Seed seed, int bound) {
  check_n(n);
  Rng rng(derive_seed(seed, 2));
  while (true) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n)));
    Matrix<Rational> a(r, n);
    bool nonzero = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = rng.uniform_int(-bound, bound);
        nonzero = nonzero || a(i, j) != 0;
      }
    if (!nonzero) continue;
    Matrix<Rational> q = a.transpose() * a;
    ENLARGE_ENSURE(linalg::is_psd(q), "A'A is not positive semidefinite");
    return q;
  }
}

Matrix<Rational> gen_mixed(std::size_t n, Seed seed) {
  return gen_skew_matrix(n, derive_seed(seed, 3)) + gen_psd(n, derive_seed(seed, 4));
}

Subspace<Rational> gen_vertical(std::size_t n) {
  check_n(n);
  return Subspace<Rational>::vertical(n);
}

Subspace<Rational> gen_maximal_monotone(std::size_t n, Seed seed) {
  check_n(n);
  Rng rng(derive_seed(seed, 5));
  // full domain half of the time so graphs of matrices dominate
  const std::size_t w = rng.coin() ? n : static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n)));
  const SplitBasis split = random_split(rng, n, w, 2);
  Matrix<Rational> m = gen_skew_matrix(n, derive_seed(seed, 6), 3);
  if (rng.uniform_int(0, 4) != 0) m = m + gen_psd(n, derive_seed(seed, 7), 2);
  return split_relation(split, m, n);
}

Subspace<Rational> gen_max_self_cancelling(std::size_t n, Seed seed) {
  check_n(n);
  Rng rng(derive_seed(seed, 8));
  const std::size_t w = rng.coin() ? n : static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n)));
  const SplitBasis split = random_split(rng, n, w, 2);
  const Subspace<Rational> a = split_relation(split, gen_skew_matrix(n, derive_seed(seed, 9), 3), n);
  ENLARGE_ENSURE(is_self_cancelling(a) && a.dim() == n, "generated relation is not maximal self-cancelling");
  return a;
}

Subspace<Rational> gen_self_cancelling(std::size_t n, std::size_t k, Seed seed) {
  check_n(n);
  require(k <= n, ErrorCode::InvalidArgument, "self-cancelling dimension k must satisfy k <= n");
  Rng rng(derive_seed(seed, 10));
  const Subspace<Rational> a = random_subspace_of(rng, gen_max_self_cancelling(n, seed), k, 2);
  ENLARGE_ENSURE(is_self_cancelling(a), "generated relation is not self-cancelling");
  return a;
}

Subspace<Rational> gen_monotone(std::size_t n, Seed seed) {
  check_n(n);
  Rng rng(derive_seed(seed, 11));
  const Subspace<Rational> m = gen_maximal_monotone(n, seed);
  const std::size_t k = rng.coin() ? n : static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n)));
  return random_subspace_of(rng, m, k, 2);
}

Subspace<Rational> gen_small_monotone(std::size_t n, Seed seed) {
  check_n(n);
  Rng rng(derive_seed(seed, 12));
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rng.uniform_int(-1, 1);
      m(j, i) = -m(i, j);
    }
  const Vec<Rational> a = random_int_vector(rng, n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += a[i] * a[j];
  // rows (e_i | M e_i) for i in the domain, (0 | e_j) otherwise
  std::vector<Vec<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<Rational> r(2 * n, Rational(0));
    if (rng.uniform_int(0, 3) != 0) {
      r[i] = 1;
      for (std::size_t j = 0; j < n; ++j) r[n + j] = m(j, i);
    } else {
      r[n + i] = 1;
    }
    rows.push_back(r);
  }
  // drop generating rows to get a proper sub-relation about half of the time
  if (rng.coin()) {
    const std::size_t keep = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 1));
    std::shuffle(rows.begin(), rows.end(), rng.engine());
    rows.resize(keep);
  }
  return Subspace<Rational>::span(rows, n);
}

Subspace<Rational> gen_subspace(std::size_t n, Seed seed) {
  check_n(n);
  Rng rng(derive_seed(seed, 13));
  const std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(2 * n)));
  std::vector<Vec<Rational>> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(random_int_vector(rng, 2 * n, 3));
  return Subspace<Rational>::span(rows, n);
}

PairedPoint<Rational> gen_point(std::size_t n, Seed seed, int bound, int denominator) {
  Rng rng(derive_seed(seed, 14));
  Vec<Rational> x(n), xs(n);
  for (auto& e : x) e = Rational(mpz_class(rng.uniform_int(-bound * denominator, bound * denominator)), mpz_class(denominator));
  for (auto& e : xs) e = Rational(mpz_class(rng.uniform_int(-bound * denominator, bound * denominator)), mpz_class(denominator));
  for (auto& e : x) e.canonicalize();
  for (auto& e : xs) e.canonicalize();
  return PairedPoint<Rational>(x, xs);
}

}  // namespace enlarge::gen

namespace enlarge::gen {

Subspace<Rational> gen_subspace_of(const Subspace<Rational>& s, std::size_t k, Seed seed) {
  Rng rng(derive_seed(seed, 15));
  return random_subspace_of(rng, s, k, 2);
}

}  // namespace enlarge::gen
