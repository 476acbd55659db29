#include "enlarge/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>

namespace enlarge::linalg {
namespace {

// ---------------------------------------------------------------- exact

struct Echelon {
  Matrix<Rational> rows;
  std::vector<std::size_t> pivots;
};

Echelon gauss_jordan(Matrix<Rational> m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < nr; ++col) {
    std::size_t sel = nr;
    for (std::size_t i = r; i < nr; ++i) {
      if (sgn(m(i, col)) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == nr) continue;
    if (sel != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(sel, j), m(r, j));
    const Rational inv = 1 / m(r, col);
    for (std::size_t j = col; j < nc; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < nc; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  Matrix<Rational> out(r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

std::size_t leading_column(std::span<const Rational> row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (sgn(row[j]) != 0) return j;
  return row.size();
}

// ---------------------------------------------------------------- float

using EMat = Eigen::MatrixXd;
using EVec = Eigen::VectorXd;

EMat to_eigen(const Matrix<double>& m) {
  EMat e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

double rank_threshold(double sigma_max) { return kTau * std::max(1.0, sigma_max); }

// Orthonormal basis of the column span of `cols_basis` (columns assumed
// orthonormal), re-expressed through the projector so that equal spans give
// equal bases up to rounding.
Matrix<double> canonical_from_orthonormal(const EMat& q) {
  const Eigen::Index dim = q.rows();
  const Eigen::Index r = q.cols();
  Matrix<double> out(0, static_cast<std::size_t>(dim));
  if (r == 0) return out;
  EMat residual = q * q.transpose();  // projector; its columns span the subspace
  for (Eigen::Index step = 0; step < r; ++step) {
    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double nrm = residual.col(j).norm();
      // ties (up to rounding) go to the lowest column index
      if (nrm > best_norm * (1.0 + 1e-12) + 1e-300) {
        best = j;
        best_norm = nrm;
      }
    }
    EVec v = residual.col(best) / best_norm;
    residual -= v * (v.transpose() * residual);
    std::vector<double> row(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 0; j < dim; ++j) row[static_cast<std::size_t>(j)] = v(j) == 0.0 ? 0.0 : v(j);
    out.append_row(row);
  }
  return out;
}

}  // namespace

Matrix<Rational> row_basis(const Matrix<Rational>& rows) { return gauss_jordan(rows).rows; }

Matrix<double> row_basis(const Matrix<double>& rows) {
  if (rows.rows() == 0) return Matrix<double>(0, rows.cols());
  const EMat m = to_eigen(rows);
  Eigen::JacobiSVD<EMat> svd(m, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double thr = rank_threshold(s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return canonical_from_orthonormal(svd.matrixV().leftCols(r));
}

Matrix<Rational> kernel(const Matrix<Rational>& m, std::size_t cols) {
  require(m.rows() == 0 || m.cols() == cols, ErrorCode::DimensionMismatch, "kernel: column count");
  Matrix<Rational> out(0, cols);
  if (m.rows() == 0) return Matrix<Rational>::identity(cols);
  const Echelon e = gauss_jordan(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, f);
    out.append_row(v);
  }
  return gauss_jordan(out).rows;
}

Matrix<double> kernel(const Matrix<double>& m, std::size_t cols) {
  require(m.rows() == 0 || m.cols() == cols, ErrorCode::DimensionMismatch, "kernel: column count");
  if (m.rows() == 0) return Matrix<double>::identity(cols);
  const EMat a = to_eigen(m);
  Eigen::JacobiSVD<EMat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = rank_threshold(s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  const Eigen::Index c = static_cast<Eigen::Index>(cols);
  return canonical_from_orthonormal(svd.matrixV().rightCols(c - r));
}

bool in_row_span(const Matrix<Rational>& basis, std::span<const Rational> v) {
  require(basis.rows() == 0 || basis.cols() == v.size(), ErrorCode::DimensionMismatch, "membership: length");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    const std::size_t p = leading_column(basis.row(i));
    if (p == w.size() || sgn(w[p]) == 0) continue;
    const Rational f = w[p] / basis(i, p);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * basis(i, j);
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& e) { return sgn(e) == 0; });
}

bool in_row_span(const Matrix<double>& basis, std::span<const double> v) {
  require(basis.rows() == 0 || basis.cols() == v.size(), ErrorCode::DimensionMismatch, "membership: length");
  std::vector<double> w(v.begin(), v.end());
  double norm2 = 0.0;
  for (double e : w) norm2 += e * e;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    const double c = dot<double>(basis.row(i), std::span<const double>(v));
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= c * basis(i, j);
  }
  double res2 = 0.0;
  for (double e : w) res2 += e * e;
  return std::sqrt(res2) <= kTau * std::max(1.0, std::sqrt(norm2));
}

std::size_t rank(const Matrix<Rational>& m) { return gauss_jordan(m).rows.rows(); }

std::size_t rank(const Matrix<double>& m) { return row_basis(m).rows(); }

bool is_psd(const Matrix<Rational>& sym) {
  require(sym.rows() == sym.cols(), ErrorCode::DimensionMismatch, "is_psd: square matrix required");
  Matrix<Rational> a = sym;
  const std::size_t k = a.rows();
  std::vector<bool> active(k, true);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t piv = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      const int s = sgn(a(i, i));
      if (s < 0) return false;
      if (s > 0 && piv == k) piv = i;
    }
    if (piv == k) {
      // every remaining diagonal entry is zero: PSD only if the block is zero
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (active[i] && active[j] && sgn(a(i, j)) != 0) return false;
      return true;
    }
    active[piv] = false;
    const Rational d = a(piv, piv);
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i] || sgn(a(i, piv)) == 0) continue;
      const Rational f = a(i, piv) / d;
      for (std::size_t j = 0; j < k; ++j)
        if (active[j]) a(i, j) -= f * a(piv, j);
    }
  }
  return true;
}

bool is_psd(const Matrix<double>& sym) {
  require(sym.rows() == sym.cols(), ErrorCode::DimensionMismatch, "is_psd: square matrix required");
  if (sym.rows() == 0) return true;
  const Vec<double> ev = symmetric_eigenvalues(sym);
  const double big = std::max(std::abs(ev.front()), std::abs(ev.back()));
  return ev.front() >= -kTau * (1.0 + big);
}

std::optional<Vec<Rational>> solve_in_range(const Matrix<Rational>& sym, const Vec<Rational>& c) {
  require(sym.rows() == c.size() && sym.cols() == c.size(), ErrorCode::DimensionMismatch, "solve: shapes");
  const std::size_t k = c.size();
  Matrix<Rational> aug(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = sym(i, j);
    aug(i, k) = c[i];
  }
  const Echelon e = gauss_jordan(aug);
  Vec<Rational> z(k, Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == k) return std::nullopt;
    z[e.pivots[i]] = e.rows(i, k);
  }
  return z;
}

std::optional<Vec<double>> solve_in_range(const Matrix<double>& sym, const Vec<double>& c) {
  require(sym.rows() == c.size() && sym.cols() == c.size(), ErrorCode::DimensionMismatch, "solve: shapes");
  const Eigen::Index k = static_cast<Eigen::Index>(c.size());
  EVec rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) rhs(i) = c[static_cast<std::size_t>(i)];
  if (k == 0) return Vec<double>{};
  const EMat a = to_eigen(sym);
  Eigen::SelfAdjointEigenSolver<EMat> es(a);
  const EVec& lam = es.eigenvalues();
  const double big = std::max(std::abs(lam(0)), std::abs(lam(k - 1)));
  const double thr = kTau * std::max(1.0, big);
  EVec z = EVec::Zero(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(lam(i)) <= thr) continue;
    const EVec u = es.eigenvectors().col(i);
    z += (u.dot(rhs) / lam(i)) * u;
  }
  const double residual = (a * z - rhs).norm();
  if (residual > kTau * (1.0 + rhs.norm())) return std::nullopt;
  return Vec<double>(z.data(), z.data() + k);
}

Vec<double> symmetric_eigenvalues(const Matrix<double>& sym) {
  if (sym.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<EMat> es(to_eigen(sym), Eigen::EigenvaluesOnly);
  const EVec& lam = es.eigenvalues();
  return Vec<double>(lam.data(), lam.data() + lam.size());
}

}  // namespace enlarge::linalg
