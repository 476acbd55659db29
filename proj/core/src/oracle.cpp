#include "enlarge/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace enlarge::oracle {
namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Orthonormal coordinates for a linear relation, by modified Gram-Schmidt on
// its basis rows.
std::vector<Eigen::VectorXd> orthonormal_rows(const Subspace<double>& s) {
  std::vector<Eigen::VectorXd> q;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(s.ambient()));
    for (std::size_t j = 0; j < s.ambient(); ++j) v(static_cast<Eigen::Index>(j)) = s.basis()(i, j);
    for (const auto& u : q) v -= u.dot(v) * u;
    const double nv = v.norm();
    if (nv > 1e-12) q.push_back(v / nv);
  }
  return q;
}

struct Integrand {
  std::vector<Eigen::VectorXd> coords;
  Eigen::VectorXd origin;  // translation, concatenated
  Eigen::VectorXd point;   // p, concatenated
  Eigen::Index n;
  std::size_t* counter;

  Eigen::VectorXd relation_point(const Eigen::VectorXd& a) const {
    Eigen::VectorXd y = origin;
    for (std::size_t i = 0; i < coords.size(); ++i) y += a(static_cast<Eigen::Index>(i)) * coords[i];
    return y;
  }

  // <x, y*> + <y, x*> - <y, y*>
  double operator()(const Eigen::VectorXd& a) const {
    ++*counter;
    const Eigen::VectorXd y = relation_point(a);
    return point.head(n).dot(y.tail(n)) + y.head(n).dot(point.tail(n)) - y.head(n).dot(y.tail(n));
  }
};

Eigen::VectorXd concat(const PairedPoint<double>& p) {
  const Vec<double> v = p.concat();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

double halton(std::size_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

SampledSup oracle_fitz_sampled(const Operator<double>& t, const PairedPoint<double>& p, std::size_t budget) {
  require(!t.is_finite(), ErrorCode::InvalidArgument, "sampling oracle needs a linear or affine relation");
  require(p.dim() == t.n(), ErrorCode::DimensionMismatch, "point dimension differs from relation");
  require(budget >= 1, ErrorCode::InvalidArgument, "budget must be positive");
  SampledSup out;
  Integrand f{orthonormal_rows(t.linear_part()), concat(t.translation()), concat(p),
              static_cast<Eigen::Index>(t.n()), &out.evaluations};
  const auto k = static_cast<Eigen::Index>(f.coords.size());
  Eigen::VectorXd best_arg = Eigen::VectorXd::Zero(k);
  double best = f(best_arg);
  if (k == 0) {
    out.value = best;
    out.radius_maxima.assign(std::size(kSampleRadii), best);
    return out;
  }
  require(static_cast<std::size_t>(k) <= std::size(kPrimes), ErrorCode::DimensionTooLarge,
          "relation dimension exceeds the Halton bases");

  const std::size_t per_radius = std::max<std::size_t>(1, budget / (2 * std::size(kSampleRadii)));
  std::size_t index = 1;
  for (double r : kSampleRadii) {
    for (std::size_t s = 0; s < per_radius; ++s, ++index) {
      Eigen::VectorXd a(k);
      for (Eigen::Index i = 0; i < k; ++i) a(i) = r * (2.0 * halton(index, kPrimes[i]) - 1.0);
      const double v = f(a);
      if (v > best) {
        best = v;
        best_arg = a;
      }
    }
    out.radius_maxima.push_back(best);
  }
  const auto& m = out.radius_maxima;
  const std::size_t last = m.size() - 1;
  const double inc_last = m[last] - m[last - 1];
  const double inc_prev = m[last - 1] - m[last - 2];
  const double inc_first = m[last - 2] - m[last - 3];
  const double floor = 1e-9 * (1.0 + std::abs(m[0]));
  if (inc_last > 5.0 * std::max(inc_prev, floor) && inc_prev > 5.0 * std::max(inc_first, floor)) {
    out.unbounded = true;
    out.value = best;
    return out;
  }

  // parabolic line searches; the integrand is a concave quadratic along lines
  std::size_t dir_index = 1;
  while (out.evaluations + 3 <= budget) {
    Eigen::VectorXd d(k);
    if (dir_index % 2 == 1) {
      d.setZero();
      d(static_cast<Eigen::Index>((dir_index / 2) % static_cast<std::size_t>(k))) = 1.0;
    } else {
      for (Eigen::Index i = 0; i < k; ++i) d(i) = 2.0 * halton(dir_index + 7919, kPrimes[i]) - 1.0;
      if (d.norm() < 1e-12) d(0) = 1.0;
      d.normalize();
    }
    ++dir_index;
    const double h = 1.0 + best_arg.norm();
    const double fp = f(best_arg + h * d);
    const double fm = f(best_arg - h * d);
    const double curvature = (fp - 2.0 * best + fm) / (h * h);
    const double slope = (fp - fm) / (2.0 * h);
    Eigen::VectorXd cand = best_arg;
    double cand_val = best;
    if (fp > cand_val) {
      cand_val = fp;
      cand = best_arg + h * d;
    }
    if (fm > cand_val) {
      cand_val = fm;
      cand = best_arg - h * d;
    }
    // a flat direction gives a curvature made of roundoff; its vertex lies
    // arbitrarily far out where the integrand is noise
    const double noise = 1e-9 * (1.0 + std::abs(fp) + std::abs(fm) + std::abs(best));
    const double step = curvature < 0.0 ? -slope / curvature : 0.0;
    if (-curvature * h * h > noise) {
      const Eigen::VectorXd vertex = best_arg + step * d;
      const double fv = f(vertex);
      if (fv > cand_val) {
        cand_val = fv;
        cand = vertex;
      }
    }
    // moves must beat the roundoff of evaluating a quadratic that far out
    const double reach = 10.0 * kSampleRadii[std::size(kSampleRadii) - 1];
    const double slack = 1e-12 * (1.0 + best_arg.squaredNorm() + cand.squaredNorm());
    if (cand_val > best + slack && cand.norm() <= reach) {
      best = cand_val;
      best_arg = cand;
    }
  }
  out.value = best;
  return out;
}

bool oracle_maximality_search(const Operator<double>& t, double grid_radius, double grid_step) {
  require(t.kind() == OperatorKind::Linear, ErrorCode::InvalidArgument, "maximality search needs a linear relation");
  require(t.n() <= 2, ErrorCode::DimensionTooLarge, "grid search is limited to n <= 2");
  require(grid_radius > 0 && grid_step > 0, ErrorCode::InvalidArgument, "grid radius and step must be positive");
  const std::size_t n = t.n();
  const Eigen::Index dim2 = static_cast<Eigen::Index>(2 * n);
  const auto coords = orthonormal_rows(t.linear_part());
  const std::size_t k = coords.size();

  // sample directions in coordinate space
  std::vector<Eigen::VectorXd> dirs;
  if (k == 1) {
    dirs.push_back(Eigen::VectorXd::Constant(1, 1.0));
    dirs.push_back(Eigen::VectorXd::Constant(1, -1.0));
  } else if (k == 2) {
    constexpr int kAngles = 720;
    for (int i = 0; i < kAngles; ++i) {
      const double th = 2.0 * std::numbers::pi * i / kAngles;
      Eigen::VectorXd d(2);
      d << std::cos(th), std::sin(th);
      dirs.push_back(d);
    }
  } else if (k > 2) {
    for (std::size_t i = 1; i <= 4000; ++i) {
      Eigen::VectorXd d(static_cast<Eigen::Index>(k));
      for (std::size_t j = 0; j < k; ++j) d(static_cast<Eigen::Index>(j)) = 2.0 * halton(i, kPrimes[j]) - 1.0;
      if (d.norm() > 1e-9) dirs.push_back(d.normalized());
    }
  }
  // sampled relation points b (concatenated), nearest first
  constexpr int kRadii = 96;
  const double sample_radius = 8.0 * grid_radius;
  std::vector<Eigen::VectorXd> samples;
  samples.push_back(Eigen::VectorXd::Zero(dim2));
  for (int ri = 1; ri <= kRadii; ++ri) {
    const double r = sample_radius * ri / kRadii;
    for (const auto& d : dirs) {
      Eigen::VectorXd b = Eigen::VectorXd::Zero(dim2);
      for (std::size_t i = 0; i < k; ++i) b += r * d(static_cast<Eigen::Index>(i)) * coords[i];
      samples.push_back(b);
    }
  }

  const int steps = static_cast<int>(std::floor(grid_radius / grid_step + 1e-9));
  const int width = 2 * steps + 1;
  std::size_t total = 1;
  for (Eigen::Index i = 0; i < dim2; ++i) total *= static_cast<std::size_t>(width);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Eigen::VectorXd p(dim2);
    std::size_t rem = idx;
    for (Eigen::Index i = 0; i < dim2; ++i) {
      p(i) = grid_step * (static_cast<int>(rem % static_cast<std::size_t>(width)) - steps);
      rem /= static_cast<std::size_t>(width);
    }
    // skip points of T
    Eigen::VectorXd residual = p;
    for (const auto& q : coords) residual -= q.dot(residual) * q;
    if (residual.norm() <= 1e-9 * std::max(1.0, p.norm())) continue;
    bool consistent = true;
    for (const auto& b : samples) {
      const Eigen::VectorXd d = p - b;
      const double v = d.head(static_cast<Eigen::Index>(n)).dot(d.tail(static_cast<Eigen::Index>(n)));
      if (v < -1e-9 * std::max(1.0, d.squaredNorm())) {
        consistent = false;
        break;
      }
    }
    if (consistent) return false;
  }
  return true;
}

template <Field F>
Subspace<F> zero_duality_locus(const Subspace<F>& t) {
  const std::size_t k = t.dim();
  const std::size_t n = t.n();
  if (k == 0) return Subspace<F>(n);
  // restricted form B_ij = <u_i, v_j> + <u_j, v_i> (twice the duality form)
  Matrix<F> form(k, k);
  const auto pts = t.basis_points();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) form(i, j) = dot(pts[i].x, pts[j].xstar) + dot(pts[j].x, pts[i].xstar);
  const Matrix<F> ker = linalg::kernel(form, k);
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec<F> v(2 * n, F(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < 2 * n; ++j) v[j] += ker(r, i) * t.basis()(i, j);
    rows.push_back(v);
  }
  return Subspace<F>::span(rows, n);
}

template Subspace<double> zero_duality_locus(const Subspace<double>&);
template Subspace<Rational> zero_duality_locus(const Subspace<Rational>&);

}  // namespace enlarge::oracle
