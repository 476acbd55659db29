#include "enlarge/suite.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string_view>
#include <thread>
#include <type_traits>

#include "enlarge/document.hpp"
#include "enlarge/enlargeability.hpp"
#include "enlarge/fitzpatrick.hpp"
#include "enlarge/generators.hpp"
#include "enlarge/oracle.hpp"

namespace enlarge::suite {
namespace {

using gen::Rng;
using gen::Seed;

// ---------------------------------------------------------------------------
// trial plumbing

struct Trial {
  enum class Status { Pass, Fail, Boundary };
  Status status = Status::Pass;
  std::string detail;
};

Trial pass() { return {}; }
Trial boundary() { return {Trial::Status::Boundary, {}}; }

using Fields = std::initializer_list<std::pair<std::string_view, std::string>>;

Trial fail(std::string_view why, Fields fields) {
  std::ostringstream out;
  out << "reason: " << why << '\n';
  for (const auto& [key, value] : fields) {
    if (value.find('\n') == std::string::npos) {
      out << key << ": " << value << '\n';
      continue;
    }
    out << key << ":\n";
    std::istringstream lines(value);
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
  return {Trial::Status::Fail, out.str()};
}

std::string str(const Subspace<Rational>& s) { return io::emit_operator(Operator<Rational>::linear(s)); }
std::string str(const Operator<Rational>& t) { return io::emit_operator(t); }
std::string str(const PairedPoint<Rational>& p) { return io::format_point(p); }
std::string str(const Rational& v) { return format_scalar(v); }
std::string str(double v) { return format_scalar(v); }
template <Field F>
std::string str(const ExtReal<F>& v) { return v.str(); }

std::string str(const Matrix<Rational>& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << format_scalar(m(i, j));
    out << "]\n";
  }
  return out.str();
}

template <Field F>
Subspace<F> as(const Subspace<Rational>& s) {
  if constexpr (is_exact_v<F>) return s;
  else return convert_subspace<F>(s);
}
template <Field F>
PairedPoint<F> as(const PairedPoint<Rational>& p) {
  if constexpr (is_exact_v<F>) return p;
  else return convert_point<F>(p);
}
template <Field F>
Operator<F> as(const Operator<Rational>& t) {
  if constexpr (is_exact_v<F>) return t;
  else return convert_operator<F>(t);
}
template <Field F>
Matrix<F> as(const Matrix<Rational>& m) {
  if constexpr (is_exact_v<F>) return m;
  else return convert_matrix<F>(m);
}
template <Field F>
F as(const Rational& v) {
  return convert_scalar<F>(v);
}

template <Field F>
bool close(const F& a, const F& b, const std::type_identity_t<F>& scale) {
  return is_negligible(F(a - b), scale);
}

// Float comparisons of derived values (gaps, sampled maxima) are made at this
// looser level; values inside the band are reported as boundary cases.
constexpr double kBand = 1e-6;

template <Field F>
bool in_band(const F& a, const F& b, const std::type_identity_t<F>& scale) {
  if constexpr (is_exact_v<F>) {
    return false;
  } else {
    return std::abs(a - b) <= kBand * std::max(1.0, std::abs(scale));
  }
}

std::size_t dim_for(std::size_t trial, std::size_t max_n = 6) { return 1 + trial % max_n; }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform_int(static_cast<int>(lo), static_cast<int>(hi)));
}

PairedPoint<Rational> random_member(Rng& rng, const Subspace<Rational>& s, int bound = 3) {
  PairedPoint<Rational> p = PairedPoint<Rational>::zero(s.n());
  for (std::size_t i = 0; i < s.dim(); ++i) p = p + Rational(rng.uniform_int(-bound, bound)) * s.basis_point(i);
  return p;
}

Rational random_eps(Rng& rng) { return Rational(mpz_class(rng.uniform_int(0, 24)), mpz_class(4)); }

Subspace<Rational> graph_of(const Matrix<Rational>& m) { return Subspace<Rational>::graph(m); }

Matrix<Rational> plus_identity(Matrix<Rational> m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 1;
  return m;
}

// Random point biased toward T: a member, a perturbed member, the effective
// domain of φ_T, or an arbitrary point.
PairedPoint<Rational> probe_point(Rng& rng, const Subspace<Rational>& t0, const PairedPoint<Rational>& shift, Seed seed) {
  const std::size_t n = t0.n();
  switch (rng.uniform_int(0, 3)) {
    case 0: return random_member(rng, t0) + shift;
    case 1: return random_member(rng, t0) + shift + gen::gen_point(n, seed, 1, 4);
    case 2: return random_member(rng, effective_domain_fitz(t0)) + shift;
    default: return gen::gen_point(n, seed);
  }
}

// ---------------------------------------------------------------------------
// relation_core

template <Field F>
Trial relation_biduality(std::size_t i, Seed s) {
  const auto b = gen::gen_subspace(dim_for(i), s);
  if (!subspace_equal(vdash(vdash(as<F>(b))), as<F>(b))) return fail("double annihilator differs", {{"B", str(b)}});
  return pass();
}

template <Field F>
Trial relation_dimension_law(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto b = gen::gen_subspace(n, s);
  const auto d = vdash(as<F>(b));
  if (b.dim() + d.dim() != 2 * n)
    return fail("dim B + dim B^vdash != 2n", {{"B", str(b)}, {"dim_vdash", std::to_string(d.dim())}});
  return pass();
}

template <Field F>
Trial relation_order_reversal(std::size_t i, Seed s) {
  Rng rng(s);
  const auto b = gen::gen_subspace(dim_for(i), s);
  const auto c = gen::gen_subspace_of(b, pick(rng, 0, b.dim()), s);
  if (!contains(vdash(as<F>(c)), vdash(as<F>(b))))
    return fail("C ⊂ B but B^vdash ⊄ C^vdash", {{"B", str(b)}, {"C", str(c)}});
  return pass();
}

template <Field F>
Trial relation_pairing_polarization(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto pr = gen::gen_point(n, gen::derive_seed(s, 1));
  const auto qr = gen::gen_point(n, gen::derive_seed(s, 2));
  const auto p = as<F>(pr);
  const auto q = as<F>(qr);
  const F pq = pairing(p, q);
  const F scale = F(1) + abs_value(duality(p)) + abs_value(duality(q)) + abs_value(pq);
  const F polar = duality(PairedPoint<F>(p + q)) - duality(p) - duality(q);
  if (!close(pq, polar, scale) || !close(pq, pairing(q, p), scale) ||
      !close(F(pairing(p, p)), F(F(2) * duality(p)), scale))
    return fail("pairing is not the polarization of duality", {{"p", str(pr)}, {"q", str(qr)}});
  return pass();
}

template <Field F>
Trial relation_canonical_form(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const auto b = gen::gen_subspace(n, s);
  std::vector<Vec<Rational>> rows;
  for (std::size_t r = 0; r < b.dim(); ++r) {
    int k = 0;
    while (k == 0) k = rng.uniform_int(-4, 4);
    rows.push_back(scaled(b.basis().row_vec(r), Rational(k)));
  }
  if (b.dim() > 0) rows.push_back(random_member(rng, b).concat());
  std::shuffle(rows.begin(), rows.end(), rng.engine());
  const auto rebuilt = Subspace<Rational>::span(rows, n);
  if constexpr (is_exact_v<F>) {
    if (!(rebuilt == b) || !(canonicalize(b.basis().row_list(), n) == b))
      return fail("canonical basis depends on the generating rows", {{"B", str(b)}, {"rebuilt", str(rebuilt)}});
  } else {
    std::vector<Vec<double>> frows;
    for (const auto& r : rows) frows.push_back(convert_vec<double>(r));
    const auto f = Subspace<double>::span(frows, n);
    if (f.dim() != b.dim() || !subspace_equal(f, as<F>(b)))
      return fail("float span of generating rows differs", {{"B", str(b)}});
  }
  return pass();
}

// ---------------------------------------------------------------------------
// monotone_ops

template <Field F>
Trial ops_self_cancelling_in_vdash(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const auto a = gen::gen_self_cancelling(n, pick(rng, 0, n), s);
  const auto af = as<F>(a);
  if (!is_self_cancelling(af) || !contains(vdash(af), af)) return fail("self-cancelling A ⊄ A^vdash", {{"A", str(a)}});
  return pass();
}

template <Field F>
Trial ops_skew_iff_maximal_self_cancelling(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  Subspace<Rational> l;
  bool expect_skew = false;
  switch (i % 4) {
    case 0: l = gen::gen_max_self_cancelling(n, s); expect_skew = true; break;
    case 1: l = gen::gen_self_cancelling(n, pick(rng, 0, n - 1), s); break;
    case 2: l = gen::gen_subspace(n, s); expect_skew = is_skew(l); break;
    default: l = gen::gen_maximal_monotone(n, s); expect_skew = is_skew(l); break;
  }
  const auto lf = as<F>(l);
  const bool skew = is_skew(lf);
  if (skew != is_maximal_self_cancelling(lf) || skew != expect_skew)
    return fail("skew and maximal self-cancelling disagree", {{"L", str(l)}});
  return pass();
}

template <Field F>
Trial ops_vdash_negate_commute(std::size_t i, Seed s) {
  const auto l = gen::gen_subspace(dim_for(i), s);
  const auto lf = as<F>(l);
  if (!subspace_equal(vdash(negate(lf)), negate(vdash(lf)))) return fail("(-L)^vdash != -(L^vdash)", {{"L", str(l)}});
  return pass();
}

template <Field F>
Trial ops_monotone_pairwise(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const auto t = gen::gen_monotone(n, s);
  if (!is_monotone(as<F>(t))) return fail("generated monotone relation rejected", {{"T", str(t)}});
  std::vector<PairedPoint<Rational>> pts;
  const std::size_t m = pick(rng, 1, 6);
  for (std::size_t k = 0; k < m; ++k) pts.push_back(random_member(rng, t));
  const auto samples = Operator<Rational>::finite(pts);
  const auto sf = as<F>(samples);
  // pairwise check written out here, independent of the library routine
  bool pairwise = true;
  for (const auto& a : sf.points())
    for (const auto& b : sf.points()) {
      const PairedPoint<F> d = a - b;
      pairwise = pairwise && approx_le(F(0), duality(d), F(1) + abs_value(duality(a)) + abs_value(duality(b)));
    }
  if (!pairwise || !is_monotone(sf))
    return fail("finite sample of a monotone relation is not monotone", {{"T", str(t)}, {"samples", str(samples)}});
  return pass();
}

template <Field F>
Trial ops_maximality_oracle(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i, 2);
  const auto t = gen::gen_small_monotone(n, s);
  const bool closed = is_maximal_monotone_linear(Operator<F>::linear(as<F>(t)));
  const bool brute = oracle::oracle_maximality_search(Operator<double>::linear(as<double>(t)), 3.0, 0.5);
  if (closed != brute)
    return fail("maximality disagrees with grid search",
                {{"T", str(t)}, {"closed_form", closed ? "true" : "false"}, {"oracle", brute ? "true" : "false"}});
  return pass();
}

template <Field F>
Trial ops_adjoint_involution(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto l = gen::gen_subspace(n, s);
  if (!subspace_equal(adjoint(adjoint(as<F>(l))), as<F>(l))) return fail("L** != L", {{"L", str(l)}});
  const auto m = gen::gen_mixed(n, s);
  if (!subspace_equal(adjoint(as<F>(graph_of(m))), as<F>(graph_of(m.transpose()))))
    return fail("adjoint of graph(M) is not graph(M')", {{"M", str(m)}});
  return pass();
}

// ---------------------------------------------------------------------------
// fitzpatrick

struct Instance {
  Subspace<Rational> t0;
  PairedPoint<Rational> shift;
  Operator<Rational> op;
};

Instance monotone_instance(std::size_t n, Seed s, bool maximal) {
  Rng rng(gen::derive_seed(s, 40));
  Subspace<Rational> t0 = maximal ? gen::gen_maximal_monotone(n, s) : gen::gen_monotone(n, s);
  const PairedPoint<Rational> shift = rng.coin() ? gen::gen_point(n, gen::derive_seed(s, 41), 3, 1)
                                                 : PairedPoint<Rational>::zero(n);
  Operator<Rational> op = Operator<Rational>::affine(t0, shift);
  return {std::move(t0), shift, std::move(op)};
}

template <Field F>
Trial fitz_route_equivalence(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const Instance in = monotone_instance(n, s, false);
  const auto pr = probe_point(rng, in.t0, in.shift, gen::derive_seed(s, 2));
  const Rational er = random_eps(rng);
  const auto op = as<F>(in.op);
  const auto p = as<F>(pr);
  const F eps = as<F>(er);
  const ExtReal<F> phi = fitz_linear(op, p);
  const ExtReal<F> gap = enlargement_gap(op, p);
  const F scale = membership_scale(op, p);
  if (phi.is_finite() != gap.is_finite())
    return fail("one route is infinite", {{"T", str(in.op)}, {"p", str(pr)}, {"phi", str(phi)}, {"gap", str(gap)}});
  if (phi.is_finite()) {
    const F fitz_gap = phi.value() - duality(p);
    if (!in_band(fitz_gap, gap.value(), scale) && !close(fitz_gap, gap.value(), scale))
      return fail("gap values differ", {{"T", str(in.op)}, {"p", str(pr)}, {"phi", str(phi)}, {"gap", str(gap)}});
    if (in_band(fitz_gap, eps, scale) || in_band(gap.value(), eps, scale)) return boundary();
  }
  const bool def = in_enlargement_def(op, p, eps);
  const bool fitz = in_enlargement_fitz(op, p, eps);
  if (def != fitz) return fail("membership routes disagree", {{"T", str(in.op)}, {"p", str(pr)}, {"eps", str(er)}});
  return pass();
}

template <Field F>
Trial fitz_fenchel_young(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const Instance in = monotone_instance(n, s, true);
  const auto pr = probe_point(rng, in.t0, in.shift, gen::derive_seed(s, 2));
  const auto op = as<F>(in.op);
  const auto p = as<F>(pr);
  const ExtReal<F> phi = fitz_linear(op, p);
  const bool inside = op.contains_point(p);
  if (!phi.is_finite()) {
    if (inside) return fail("phi infinite on T", {{"T", str(in.op)}, {"p", str(pr)}});
    return pass();
  }
  const F d = duality(p);
  const F scale = membership_scale(op, p);
  if (!approx_le(d, phi.value(), scale))
    return fail("phi below duality", {{"T", str(in.op)}, {"p", str(pr)}, {"phi", str(phi)}});
  const bool equal = close(phi.value(), d, scale);
  if (!inside && in_band(phi.value(), d, scale)) return boundary();
  if (equal != inside)
    return fail("phi = duality off T or phi > duality on T",
                {{"T", str(in.op)}, {"p", str(pr)}, {"phi", str(phi)}, {"member", inside ? "true" : "false"}});
  return pass();
}

template <Field F>
Trial fitz_finite_samples_below(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const Instance in = monotone_instance(n, s, false);
  const auto pr = gen::gen_point(n, gen::derive_seed(s, 2));
  const auto p = as<F>(pr);
  const auto op = as<F>(in.op);
  const ExtReal<F> full = fitz_linear(op, p);
  std::vector<PairedPoint<Rational>> pts;
  ExtReal<F> prev = ExtReal<F>::minus_inf();
  const F scale = membership_scale(op, p);
  for (std::size_t m = 0; m < 6; ++m) {
    pts.push_back(random_member(rng, in.t0) + in.shift);
    const auto samples = Operator<Rational>::finite(pts);
    const ExtReal<F> v = fitz_finite(as<F>(samples), p);
    const bool grows = !prev.is_finite() || approx_le(prev.value(), v.value(), scale);
    const bool below = !full.is_finite() || approx_le(v.value(), full.value(), scale + abs_value(v.value()));
    if (!grows || !below)
      return fail("finite-sample sup not monotone in the sample or above phi_T",
                  {{"T", str(in.op)}, {"p", str(pr)}, {"samples", str(samples)}, {"phi_T", str(full)}, {"phi_S", str(v)}});
    prev = v;
  }
  return pass();
}

template <Field F>
Trial fitz_translation_equivariance(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const auto t0 = gen::gen_monotone(n, s);
  const auto tr = gen::gen_point(n, gen::derive_seed(s, 3), 3, 2);
  const auto pr = probe_point(rng, t0, PairedPoint<Rational>::zero(n), gen::derive_seed(s, 2));
  const Rational er = random_eps(rng);
  const auto base = Operator<F>::linear(as<F>(t0));
  const auto moved = translate(base, as<F>(tr));
  const auto p = as<F>(pr);
  const auto pt = PairedPoint<F>(p + as<F>(tr));
  const ExtReal<F> g0 = enlargement_gap(base, p);
  const ExtReal<F> g1 = enlargement_gap(moved, pt);
  const F scale = membership_scale(moved, pt);
  if (g0.is_finite() != g1.is_finite() || (g0.is_finite() && !in_band(g0.value(), g1.value(), scale) &&
                                           !close(g0.value(), g1.value(), scale)))
    return fail("gap changes under translation",
                {{"T", str(t0)}, {"t", str(tr)}, {"p", str(pr)}, {"gap", str(g0)}, {"gap_translated", str(g1)}});
  const F eps = as<F>(er);
  if (g0.is_finite() && (in_band(g0.value(), eps, scale) || in_band(g1.value(), eps, scale))) return boundary();
  if (in_enlargement_def(base, p, eps) != in_enlargement_def(moved, pt, eps))
    return fail("membership changes under translation", {{"T", str(t0)}, {"t", str(tr)}, {"p", str(pr)}, {"eps", str(er)}});
  return pass();
}

QuadFunc<Rational> random_quad(std::size_t n, Seed s, bool nonsingular) {
  Rng rng(gen::derive_seed(s, 50));
  Matrix<Rational> q = gen::gen_psd(n, s);
  if (nonsingular) q = plus_identity(q);
  Vec<Rational> b(n);
  for (auto& e : b) e = rng.uniform_int(-3, 3);
  return QuadFunc<Rational>(q, b, Rational(rng.uniform_int(-3, 3)));
}

template <Field F>
QuadFunc<F> as_quad(const QuadFunc<Rational>& f) {
  if constexpr (is_exact_v<F>) return f;
  else return QuadFunc<F>(as<F>(f.q()), convert_vec<F>(f.b()), as<F>(f.c()));
}

std::string str(const QuadFunc<Rational>& f) {
  std::ostringstream out;
  out << "Q:\n" << str(f.q()) << "b: " << str(PairedPoint<Rational>(f.b(), f.b())) << "\nc: " << str(f.c());
  return out.str();
}

template <Field F>
Trial fitz_eps_subdifferential(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const auto fr = random_quad(n, s, false);
  Vec<Rational> x = gen::gen_point(n, gen::derive_seed(s, 2)).x;
  Vec<Rational> xs = fr.gradient(x) + gen::gen_point(n, gen::derive_seed(s, 3), 1, 4).xstar;
  const PairedPoint<Rational> pr(x, xs);
  const Rational er = random_eps(rng);
  const auto f = as_quad<F>(fr);
  const auto p = as<F>(pr);
  const F eps = as<F>(er);
  const auto t = subdifferential(f);
  const ExtReal<F> h = h_fy(f, p);
  const F scale = membership_scale(t, p);
  if (h.is_finite() && in_band(F(h.value() - duality(p)), eps, scale)) return boundary();
  if (in_eps_subdifferential(f, p, eps) && !in_enlargement_def(t, p, eps))
    return fail("eps-subgradient outside the enlargement", {{"f", str(fr)}, {"p", str(pr)}, {"eps", str(er)}});
  // strictness: f = ½|x|^2, eps = k^2, p = (0, 3k/2 e_1)
  const Rational k(rng.uniform_int(1, 4));
  Vec<Rational> zero(n, Rational(0)), star(n, Rational(0));
  star[0] = Rational(3) * k / 2;
  const auto half = QuadFunc<F>::half_norm_squared(n);
  const PairedPoint<F> w(as<F>(PairedPoint<Rational>(zero, star)));
  const F ek = as<F>(Rational(k * k));
  if (in_eps_subdifferential(half, w, ek) || !in_enlargement_def(subdifferential(half), w, ek))
    return fail("strict inclusion witness misclassified", {{"k", str(k)}});
  return pass();
}

template <Field F>
Trial fitz_conjugate_involution(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto fr = random_quad(n, s, true);
  const auto f = as_quad<F>(fr);
  const auto ff = conjugate_function(conjugate_function(f));
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec<F> x = as<F>(gen::gen_point(n, gen::derive_seed(s, 10 + k))).x;
    const F a = f(x);
    const F b = ff(x);
    if (!in_band(a, b, F(a)) && !close(a, b, F(1) + abs_value(a)))
      return fail("f** differs from f", {{"f", str(fr)}, {"f(x)", str(a)}, {"f**(x)", str(b)}});
  }
  return pass();
}

template <Field F>
Trial fitz_eps_monotonicity(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const Instance in = monotone_instance(n, s, true);
  const auto pr = probe_point(rng, in.t0, in.shift, gen::derive_seed(s, 2));
  Rational e1 = random_eps(rng), e2 = random_eps(rng);
  if (e2 < e1) std::swap(e1, e2);
  const auto op = as<F>(in.op);
  const auto p = as<F>(pr);
  const ExtReal<F> gap = enlargement_gap(op, p);
  const F scale = membership_scale(op, p);
  if (gap.is_finite())
    for (const Rational& e : {Rational(0), e1, e2})
      if (in_band(gap.value(), as<F>(e), scale) && !op.contains_point(p)) return boundary();
  const bool in0 = in_enlargement_def(op, p, F(0));
  if (in0 != op.contains_point(p)) return fail("T^0 != T", {{"T", str(in.op)}, {"p", str(pr)}});
  if (in_enlargement_def(op, p, as<F>(e1)) && !in_enlargement_def(op, p, as<F>(e2)))
    return fail("enlargement not monotone in eps", {{"T", str(in.op)}, {"p", str(pr)}, {"eps1", str(e1)}, {"eps2", str(e2)}});
  return pass();
}

// Graph of S + Q + I: φ_T is finite everywhere, so the sampled sup has to
// converge to the closed form.
Subspace<Rational> bounded_instance(std::size_t n, Seed s) {
  return graph_of(gen::gen_skew_matrix(n, s, 2) + plus_identity(gen::gen_psd(n, gen::derive_seed(s, 1), 1)));
}

constexpr std::size_t kOracleBudget = 100000;
constexpr double kOracleAgreement = 1e-4;

template <Field F>
Trial check_oracle(const Operator<Rational>& tr, const PairedPoint<Rational>& pr) {
  const ExtReal<F> closed = fitz_linear(as<F>(tr), as<F>(pr));
  const auto sampled = oracle::oracle_fitz_sampled(as<double>(tr), as<double>(pr), kOracleBudget);
  if (!closed.is_finite()) {
    if (!sampled.unbounded)
      return fail("closed form infinite, sampling bounded", {{"T", str(tr)}, {"p", str(pr)}, {"sampled", str(sampled.value)}});
    return pass();
  }
  const double c = to_double(closed.value());
  if (sampled.unbounded || sampled.value > c + 1e-9 * std::max(1.0, std::abs(c)) ||
      std::abs(sampled.value - c) > kOracleAgreement * std::max(1.0, std::abs(c)))
    return fail("closed form and sampled sup disagree",
                {{"T", str(tr)}, {"p", str(pr)}, {"closed", str(closed)}, {"sampled", str(sampled.value)}});
  return pass();
}

template <Field F>
Trial fitz_oracle_agreement(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i, 4);
  const auto pr = gen::gen_point(n, gen::derive_seed(s, 2), 2, 2);
  if (Trial r = check_oracle<F>(Operator<Rational>::linear(bounded_instance(n, s)), pr); r.status != Trial::Status::Pass)
    return r;
  const auto skew = gen::gen_skew(n, s, 2);
  if (member(skew, pr)) return pass();
  return check_oracle<F>(Operator<Rational>::linear(skew), pr);
}

template <Field F>
Trial fitz_affine_correction(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i, 4);
  const auto tr = gen::gen_point(n, gen::derive_seed(s, 3), 3, 1);
  const auto pr = gen::gen_point(n, gen::derive_seed(s, 2), 2, 2);
  return check_oracle<F>(Operator<Rational>::affine(bounded_instance(n, s), tr), pr);
}

// ---------------------------------------------------------------------------
// enlargeability

template <Field F>
Trial enl_constructive_roundtrip(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto a = gen::gen_max_self_cancelling(n, s);
  const auto t = gen::gen_point(n, gen::derive_seed(s, 3), 3, 2);
  const auto op = construct_from_self_cancelling(as<F>(a), as<F>(t));
  const Verdict<F> v = decide_non_enlargeable(op);
  if (!v.non_enlargeable()) return fail("constructed operator reported enlargeable", {{"A", str(a)}, {"t", str(t)}});
  const auto& c = v.certificate();
  if (!subspace_equal(c.pre_dual, as<F>(a)) || !op.contains_point(c.base_point))
    return fail("certificate does not reproduce the construction", {{"A", str(a)}, {"t", str(t)}});
  return pass();
}

template <Field F>
Trial check_witness(const Operator<Rational>& tr, const Verdict<F>& v) {
  const auto op = as<F>(tr);
  const auto& e = v.enlargement();
  const F scale = membership_scale(op, e.witness);
  if (op.contains_point(e.witness)) return fail("witness lies in T", {{"T", str(tr)}});
  if (!(e.witness_eps > F(0)) || !close(e.witness_eps, F(e.phi_value - e.duality_value), scale))
    return fail("witness eps inconsistent", {{"T", str(tr)}, {"eps", str(e.witness_eps)}});
  const ExtReal<F> phi = fitz_linear(op, e.witness);
  if (!phi.is_finite() || !close(phi.value(), e.phi_value, scale))
    return fail("witness phi value wrong", {{"T", str(tr)}, {"phi", str(phi)}});
  if (!in_enlargement_def(op, e.witness, e.witness_eps) || !in_enlargement_fitz(op, e.witness, e.witness_eps))
    return fail("witness outside the enlargement", {{"T", str(tr)}, {"eps", str(e.witness_eps)}});
  return pass();
}

template <Field F>
Trial enl_negative_direction(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const auto q = gen::gen_psd(n, s);
  const auto t = rng.coin() ? gen::gen_point(n, gen::derive_seed(s, 3), 3, 1) : PairedPoint<Rational>::zero(n);
  const auto tr = Operator<Rational>::affine(graph_of(q), t);
  const Verdict<F> v = decide_non_enlargeable(as<F>(tr));
  if (v.non_enlargeable()) return fail("graph of nonzero PSD matrix reported non-enlargeable", {{"T", str(tr)}});
  return check_witness<F>(tr, v);
}

template <Field F>
Trial enl_mixed_case(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const Matrix<Rational> skew = gen::gen_skew_matrix(n, gen::derive_seed(s, 3));
  const Matrix<Rational> q = gen::gen_psd(n, gen::derive_seed(s, 4));
  const Matrix<Rational> m = gen::gen_mixed(n, s);
  const auto t = graph_of(m);
  const auto op = Operator<F>::linear(as<F>(t));
  if (!is_maximal_monotone_linear(op)) return fail("graph(S + Q) not maximal monotone", {{"M", str(m)}});
  const Verdict<F> v = decide_non_enlargeable(op);
  if (v.non_enlargeable()) return fail("graph(S + Q) reported non-enlargeable", {{"M", str(m)}});
  const Matrix<Rational> ker = linalg::kernel(q, n);
  std::vector<Vec<Rational>> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec<Rational> x = ker.row_vec(r);
    const Vec<Rational> mx = m * x;
    x.insert(x.end(), mx.begin(), mx.end());
    rows.push_back(x);
  }
  const auto expected = Subspace<Rational>::span(rows, n);
  if (!subspace_equal(max_self_cancelling_part(as<F>(t)), as<F>(expected)))
    return fail("T ∩ T^vdash is not the graph over ker Q", {{"M", str(m)}, {"expected", str(expected)}});
  return check_witness<F>(Operator<Rational>::linear(t), v);
}

template <Field F>
Trial enl_lemma21(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto t = gen::gen_maximal_monotone(n, s);
  const auto tf = as<F>(t);
  if (!lemma21_item1_check(tf)) return fail("phi_T does not vanish on T^vdash", {{"T", str(t)}});
  const auto part = max_self_cancelling_part(tf);
  if (!subspace_equal(part, oracle::zero_duality_locus(tf)) || !subspace_equal(part, intersect(tf, vdash(tf))))
    return fail("T ∩ T^vdash differs from the zero-duality locus", {{"T", str(t)}});
  return pass();
}

template <Field F>
Trial enl_witness_soundness(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const Instance in = monotone_instance(n, s, true);
  const auto op = as<F>(in.op);
  const Verdict<F> v = decide_non_enlargeable(op);
  if (!v.non_enlargeable()) return check_witness<F>(in.op, v);
  const auto& c = v.certificate();
  if (!is_self_cancelling(c.pre_dual) || !subspace_equal(vdash(c.pre_dual), op.linear_part()) ||
      !op.contains_point(c.base_point))
    return fail("certificate invalid", {{"T", str(in.op)}});
  if (!subspace_equal(effective_domain_fitz(op.linear_part()), op.linear_part()))
    return fail("non-enlargeable T with dom phi_T != T", {{"T", str(in.op)}});
  return pass();
}

template <Field F>
Trial enl_translation_invariance(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto t0 = gen::gen_maximal_monotone(n, s);
  const auto tr = gen::gen_point(n, gen::derive_seed(s, 3), 3, 2);
  const auto base = Operator<F>::linear(as<F>(t0));
  const auto moved = Operator<F>::affine(as<F>(t0), as<F>(tr));
  const Verdict<F> v0 = decide_non_enlargeable(base);
  const Verdict<F> v1 = decide_non_enlargeable(moved);
  const Fields fields = {{"T", str(t0)}, {"t", str(tr)}};
  if (v0.non_enlargeable() != v1.non_enlargeable()) return fail("verdict changes under translation", fields);
  if (v0.non_enlargeable()) {
    if (!subspace_equal(v0.certificate().pre_dual, v1.certificate().pre_dual))
      return fail("certificate changes under translation", fields);
    return pass();
  }
  const auto& e0 = v0.enlargement();
  const auto& e1 = v1.enlargement();
  if (!points_close(PairedPoint<F>(e1.witness - moved.translation()), e0.witness) ||
      !close(e0.witness_eps, e1.witness_eps, F(F(1) + abs_value(e0.witness_eps))))
    return fail("witness does not move with the translation", fields);
  return pass();
}

template <Field F>
Trial enl_lemma31(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  const std::size_t k = pick(rng, 0, n);
  const auto a = gen::gen_self_cancelling(n, k, s);
  const bool shortcut = lemma31_shortcut(as<F>(a));
  if (shortcut != (k == n)) return fail("A^vdash monotone iff dim A = n fails", {{"A", str(a)}});
  if (shortcut && !is_maximal_monotone_linear(Operator<F>::linear(vdash(as<F>(a)))))
    return fail("monotone A^vdash is not maximal monotone", {{"A", str(a)}});
  return pass();
}

template <Field F>
Trial enl_sign(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto a = gen::gen_max_self_cancelling(n, s);
  if (disambiguate_sign(as<F>(a)) != SignTag::Plus || disambiguate_sign(negate(as<F>(a))) != SignTag::Plus)
    return fail("maximal self-cancelling A with A^vdash not monotone", {{"A", str(a)}});
  const auto q = gen::gen_psd(n, s);
  if (classify_dual_sign(as<F>(graph_of(q))) != SignTag::Plus || classify_dual_sign(as<F>(graph_of(-q))) != SignTag::Minus)
    return fail("sign of graph(Q) / graph(-Q) misclassified", {{"Q", str(q)}});
  if (n >= 2) {
    Matrix<Rational> d = Matrix<Rational>::identity(n);
    d(1, 1) = -1;
    if (classify_dual_sign(as<F>(graph_of(d))) != SignTag::Neither) return fail("indefinite graph given a sign", {});
  }
  return pass();
}

template <Field F>
Trial enl_open_question(std::size_t i, Seed s) {
  const std::size_t n = dim_for(i);
  const auto a = gen::gen_max_self_cancelling(n, s);
  const auto d = vdash(as<F>(a));
  if (!is_maximal_monotone_linear(Operator<F>::linear(d)) || !subspace_equal(d, as<F>(a)))
    return fail("A^vdash not maximal monotone for maximal self-cancelling A", {{"A", str(a)}});
  return pass();
}

// ---------------------------------------------------------------------------
// io (always exact: the document format round-trips rationals bit-exactly)

template <Field F>
Trial io_roundtrip(std::size_t i, Seed s) {
  Rng rng(s);
  const std::size_t n = dim_for(i);
  Operator<Rational> t = Operator<Rational>::linear(gen::gen_subspace(n, s));
  switch (i % 3) {
    case 0: {
      std::vector<PairedPoint<Rational>> pts;
      const std::size_t m = pick(rng, 1, 5);
      for (std::size_t k = 0; k < m; ++k) pts.push_back(gen::gen_point(n, gen::derive_seed(s, 20 + k), 7, 3));
      t = Operator<Rational>::finite(pts);
      break;
    }
    case 1: t = Operator<Rational>::affine(gen::gen_subspace(n, s), gen::gen_point(n, gen::derive_seed(s, 2), 9, 7)); break;
    default: break;
  }
  const std::string text = io::emit_operator(t);
  const auto parsed = io::parse_operator(text);
  if (!same_operator(parsed.op, t) || io::emit_operator(parsed.op) != text)
    return fail("document does not round-trip", {{"document", text}});
  if (!parsed.warnings.empty()) return fail("emitted document produces warnings", {{"document", text}});
  return pass();
}

// ---------------------------------------------------------------------------
// registry

using TrialFn = Trial (*)(std::size_t, Seed);

struct PropertyDef {
  std::string_view name;
  std::size_t cap;  // 0: no cap on the trial count
  TrialFn float_fn;
  TrialFn exact_fn;
};

#define ENLARGE_PROPERTY(name, fn, cap) PropertyDef{name, cap, &fn<double>, &fn<Rational>}

const std::vector<PropertyDef>& registry() {
  static const std::vector<PropertyDef> defs = {
      ENLARGE_PROPERTY("relation.biduality", relation_biduality, 0),
      ENLARGE_PROPERTY("relation.dimension_law", relation_dimension_law, 0),
      ENLARGE_PROPERTY("relation.order_reversal", relation_order_reversal, 0),
      ENLARGE_PROPERTY("relation.pairing_polarization", relation_pairing_polarization, 0),
      ENLARGE_PROPERTY("relation.canonical_form", relation_canonical_form, 0),
      ENLARGE_PROPERTY("monotone_ops.self_cancelling_in_vdash", ops_self_cancelling_in_vdash, 0),
      ENLARGE_PROPERTY("monotone_ops.skew_iff_maximal_self_cancelling", ops_skew_iff_maximal_self_cancelling, 0),
      ENLARGE_PROPERTY("monotone_ops.vdash_negate_commute", ops_vdash_negate_commute, 0),
      ENLARGE_PROPERTY("monotone_ops.monotone_pairwise", ops_monotone_pairwise, 0),
      ENLARGE_PROPERTY("monotone_ops.maximality_oracle", ops_maximality_oracle, 100),
      ENLARGE_PROPERTY("monotone_ops.adjoint_involution", ops_adjoint_involution, 0),
      ENLARGE_PROPERTY("fitzpatrick.route_equivalence", fitz_route_equivalence, 0),
      ENLARGE_PROPERTY("fitzpatrick.fenchel_young", fitz_fenchel_young, 0),
      ENLARGE_PROPERTY("fitzpatrick.finite_samples_below", fitz_finite_samples_below, 0),
      ENLARGE_PROPERTY("fitzpatrick.translation_equivariance", fitz_translation_equivariance, 0),
      ENLARGE_PROPERTY("fitzpatrick.eps_subdifferential", fitz_eps_subdifferential, 0),
      ENLARGE_PROPERTY("fitzpatrick.conjugate_involution", fitz_conjugate_involution, 0),
      ENLARGE_PROPERTY("fitzpatrick.eps_monotonicity", fitz_eps_monotonicity, 0),
      ENLARGE_PROPERTY("fitzpatrick.oracle_agreement", fitz_oracle_agreement, 50),
      ENLARGE_PROPERTY("fitzpatrick.affine_correction", fitz_affine_correction, 50),
      ENLARGE_PROPERTY("enlargeability.constructive_roundtrip", enl_constructive_roundtrip, 0),
      ENLARGE_PROPERTY("enlargeability.negative_direction", enl_negative_direction, 0),
      ENLARGE_PROPERTY("enlargeability.mixed_case", enl_mixed_case, 0),
      ENLARGE_PROPERTY("enlargeability.maximal_monotone_facts", enl_lemma21, 0),
      ENLARGE_PROPERTY("enlargeability.witness_soundness", enl_witness_soundness, 0),
      ENLARGE_PROPERTY("enlargeability.translation_invariance", enl_translation_invariance, 0),
      ENLARGE_PROPERTY("enlargeability.dual_monotone_iff_maximal", enl_lemma31, 0),
      ENLARGE_PROPERTY("enlargeability.sign", enl_sign, 0),
      ENLARGE_PROPERTY("enlargeability.dual_of_maximal_self_cancelling", enl_open_question, 0),
      ENLARGE_PROPERTY("io.roundtrip", io_roundtrip, 0),
  };
  return defs;
}

#undef ENLARGE_PROPERTY

std::uint64_t name_hash(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool selected(std::string_view name, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(), [&](const std::string& p) { return name.substr(0, p.size()) == p; });
}

PropertyResult run_property(const PropertyDef& def, const SuiteOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  PropertyResult r;
  r.name = std::string(def.name);
  r.trials = def.cap == 0 ? options.trials : std::min(options.trials, def.cap);
  const TrialFn fn = options.mode == ArithMode::Exact ? def.exact_fn : def.float_fn;
  const std::uint64_t stream = name_hash(def.name);
  for (std::size_t i = 0; i < r.trials; ++i) {
    const gen::Seed seed = gen::derive_seed(options.seed, stream, i);
    Trial t;
    try {
      t = fn(i, seed);
    } catch (const std::exception& e) {
      t = fail(std::string("exception: ") + e.what(), {{"seed", std::to_string(seed)}});
    }
    if (t.status == Trial::Status::Boundary) ++r.boundary;
    if (t.status != Trial::Status::Fail) continue;
    if (r.failures++ == 0) r.counterexample = "trial: " + std::to_string(i) + "\n" + t.detail;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

}  // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t total = 0;
  for (const auto& p : properties) total += p.failures;
  return total;
}

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& d : registry()) names.emplace_back(d.name);
  return names;
}

SuiteReport run_suite(const SuiteOptions& options) {
  require(options.trials > 0, ErrorCode::InvalidArgument, "trial count must be positive");
  const auto start = std::chrono::steady_clock::now();
  std::vector<const PropertyDef*> todo;
  for (const auto& d : registry())
    if (selected(d.name, options.only)) todo.push_back(&d);
  require(!todo.empty(), ErrorCode::InvalidArgument, "no property matches the selection");

  SuiteReport report;
  report.mode = options.mode;
  report.seed = options.seed;
  report.properties.resize(todo.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(todo.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) report.properties[k] = run_property(*todo[k], options);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const SuiteReport& report, bool include_timing) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "mode" << YAML::Value << (report.mode == ArithMode::Exact ? "exact" : "float");
  out << YAML::Key << "seed" << YAML::Value << report.seed;
  out << YAML::Key << "passed" << YAML::Value << report.passed();
  out << YAML::Key << "failures" << YAML::Value << report.failures();
  if (include_timing) out << YAML::Key << "elapsed_ms" << YAML::Value << std::round(report.elapsed_ms);
  out << YAML::Key << "properties" << YAML::Value << YAML::BeginSeq;
  for (const auto& p : report.properties) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << p.name;
    out << YAML::Key << "trials" << YAML::Value << p.trials;
    out << YAML::Key << "failures" << YAML::Value << p.failures;
    out << YAML::Key << "boundary" << YAML::Value << p.boundary;
    if (include_timing) out << YAML::Key << "elapsed_ms" << YAML::Value << std::round(p.elapsed_ms);
    if (!p.counterexample.empty()) out << YAML::Key << "counterexample" << YAML::Value << YAML::Literal << p.counterexample;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace enlarge::suite
