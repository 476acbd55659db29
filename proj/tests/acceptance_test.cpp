// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "enlarge/enlargeability.hpp"
#include "enlarge/fitzpatrick.hpp"
#include "enlarge/generators.hpp"
#include "enlarge/oracle.hpp"
#include "enlarge/suite.hpp"

namespace {

using namespace enlarge;
using gen::derive_seed;
using gen::Rng;
using gen::Seed;

constexpr double kTau = 1e-9;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
bool criterion(int number, const char* title, Fn&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", number, title, seconds_since(t0),
              o.note.str().c_str());
  std::fflush(stdout);
  return o.ok;
}

std::size_t dim(std::size_t i, std::size_t max_n = 6) { return 1 + i % max_n; }

PairedPoint<Rational> member_of(Rng& rng, const Subspace<Rational>& s) {
  auto p = PairedPoint<Rational>::zero(s.n());
  for (std::size_t i = 0; i < s.dim(); ++i) p = p + Rational(rng.uniform_int(-3, 3)) * s.basis_point(i);
  return p;
}

PairedPoint<Rational> probe(Rng& rng, const Subspace<Rational>& t0, const PairedPoint<Rational>& shift, Seed s) {
  const std::size_t n = t0.n();
  switch (rng.uniform_int(0, 3)) {
    case 0: return member_of(rng, t0) + shift;
    case 1: return member_of(rng, t0) + shift + gen::gen_point(n, s, 1, 4);
    case 2: return member_of(rng, effective_domain_fitz(t0)) + shift;
    default: return gen::gen_point(n, s);
  }
}

Rational quarter(int k) { return Rational(mpz_class(k), mpz_class(4)); }

Matrix<Rational> plus_identity(Matrix<Rational> m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 1;
  return m;
}

bool c1() {
  return criterion(1, "skew plus translation is non-enlargeable with A = graph(S), 200 instances", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (Seed i = 0; i < 200; ++i) {
      const std::size_t n = dim(i);
      const auto s = gen::gen_skew_matrix(n, derive_seed(1, i));
      const auto a = Subspace<Rational>::graph(s);
      const auto t = Operator<Rational>::affine(a, gen::gen_point(n, derive_seed(2, i)));
      const auto v = decide_non_enlargeable(t);
      o.check(v.non_enlargeable(), "verdict enlargeable at instance " + std::to_string(i));
      if (v.non_enlargeable()) o.check(v.certificate().pre_dual == a, "A != graph(S) at instance " + std::to_string(i));
    }
    const double secs = seconds_since(t0);
    o.check(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  });
}

bool c2() {
  return criterion(2, "graph of nonzero PSD Q is enlargeable with verified witnesses, 200 instances", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (Seed i = 0; i < 200; ++i) {
      const std::size_t n = dim(i);
      const auto t = Operator<Rational>::linear(Subspace<Rational>::graph(gen::gen_psd(n, derive_seed(3, i))));
      const auto v = decide_non_enlargeable(t);
      const std::string at = " at instance " + std::to_string(i);
      o.check(!v.non_enlargeable(), "verdict non-enlargeable" + at);
      if (v.non_enlargeable()) continue;
      const auto& e = v.enlargement();
      o.check(e.witness_eps > 0, "eps not positive" + at);
      o.check(in_enlargement_def(t, e.witness, e.witness_eps), "witness outside T^eps" + at);
      o.check(!t.contains_point(e.witness), "witness inside T" + at);
    }
    const double secs = seconds_since(t0);
    o.check(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  });
}

bool c3() {
  return criterion(3, "definition and Fitzpatrick routes agree on 1000 (T, p, eps) triples", [](Outcome& o) {
    std::size_t disagree_float = 0, boundary = 0, disagree_exact = 0;
    for (Seed i = 0; i < 1000; ++i) {
      const std::size_t n = dim(i);
      Rng rng(derive_seed(4, i));
      const auto t0 = rng.coin() ? gen::gen_maximal_monotone(n, derive_seed(5, i)) : gen::gen_monotone(n, derive_seed(5, i));
      const auto shift = rng.coin() ? gen::gen_point(n, derive_seed(6, i), 3, 1) : PairedPoint<Rational>::zero(n);
      const auto tr = Operator<Rational>::affine(t0, shift);
      const auto pr = probe(rng, t0, shift, derive_seed(7, i));
      const Rational er = quarter(rng.uniform_int(0, 24));

      if (in_enlargement_def(tr, pr, er) != in_enlargement_fitz(tr, pr, er)) ++disagree_exact;

      const auto t = convert_operator<double>(tr);
      const auto p = convert_point<double>(pr);
      const double eps = to_double(er);
      const ExtReal<double> phi = fitz_linear(t, p);
      if (phi.is_finite() &&
          std::abs(phi.value() - duality(p) - eps) <= kTau * std::max(1.0, std::abs(membership_scale(t, p)))) {
        ++boundary;
        continue;
      }
      if (in_enlargement_def(t, p, eps) != in_enlargement_fitz(t, p, eps)) ++disagree_float;
    }
    o.note << "float disagreements " << disagree_float << ", boundary excluded " << boundary
           << ", exact disagreements " << disagree_exact << "; ";
    o.check(disagree_float == 0, "float routes disagree");
    o.check(disagree_exact == 0, "exact routes disagree");
  });
}

bool c4() {
  return criterion(4, "phi of graph(identity) is (x+x*)^2/4 on a 21x21 grid; sampled sup matches on 50 instances",
                   [](Outcome& o) {
    const auto id_exact = Operator<Rational>::linear(Subspace<Rational>::graph(Matrix<Rational>::identity(1)));
    const auto id_float = convert_operator<double>(id_exact);
    double worst = 0;
    for (int i = -10; i <= 10; ++i) {
      for (int j = -10; j <= 10; ++j) {
        const Rational x(i, 2), xs(j, 2);
        const Rational expected = (x + xs) * (x + xs) / 4;
        const auto v = fitz_linear(id_exact, PairedPoint<Rational>({x}, {xs}));
        o.check(v.is_finite() && v.value() == expected, "exact grid value at " + std::to_string(i) + "," + std::to_string(j));
        const auto f = fitz_linear(id_float, PairedPoint<double>({i / 2.0}, {j / 2.0}));
        const double err = f.is_finite() ? std::abs(f.value() - to_double(expected)) : INFINITY;
        worst = std::max(worst, err);
      }
    }
    o.note << "worst float grid error " << worst << "; ";
    o.check(worst <= 1e-12, "float grid error");

    double worst_rel = 0;
    for (Seed i = 0; i < 50; ++i) {
      const std::size_t n = dim(i, 4);
      const Seed s = derive_seed(8, i);
      const auto m = gen::gen_skew_matrix(n, s, 2) + plus_identity(gen::gen_psd(n, derive_seed(s, 1), 1));
      const auto t = Operator<double>::linear(convert_subspace<double>(Subspace<Rational>::graph(m)));
      const auto p = convert_point<double>(gen::gen_point(n, derive_seed(9, i), 2, 2));
      const auto closed = fitz_linear(t, p);
      const auto sampled = oracle::oracle_fitz_sampled(t, p, 100000);
      o.check(closed.is_finite() && !sampled.unbounded, "bounded instance " + std::to_string(i) + " reported infinite");
      if (!closed.is_finite()) continue;
      const double rel = std::abs(sampled.value - closed.value()) / std::max(1.0, std::abs(closed.value()));
      worst_rel = std::max(worst_rel, rel);
    }
    o.note << "worst oracle deviation " << worst_rel << " (relative to max(1,|phi|)); ";
    o.check(worst_rel <= 1e-4, "oracle deviation");
  });
}

bool c5() {
  return criterion(5, "eps-subdifferential of x^2/2 at 0 is strictly inside the enlargement", [](Outcome& o) {
    const auto f = QuadFunc<Rational>::half_norm_squared(1);
    const auto graph_id = subdifferential(f);
    auto verify = [&](const Rational& eps, const Rational& xs) {
      const PairedPoint<Rational> p({Rational(0)}, {xs});
      // x* in [-sqrt(2 eps), sqrt(2 eps)]  and  x* in [-2 sqrt(eps), 2 sqrt(eps)], decided on squares
      const bool want_sub = xs * xs <= 2 * eps;
      const bool want_enl = xs * xs <= 4 * eps;
      const std::string at = "eps " + eps.get_str() + ", x* " + xs.get_str();
      o.check(in_eps_subdifferential(f, p, eps) == want_sub, "subdifferential membership, " + at);
      o.check(in_enlargement_def(graph_id, p, eps) == want_enl, "enlargement (definition), " + at);
      o.check(in_enlargement_fitz(graph_id, p, eps) == want_enl, "enlargement (Fitzpatrick), " + at);
      return std::pair{want_sub, want_enl};
    };
    const Rational fractions[] = {Rational(1, 10), Rational(1, 2), Rational(7, 10), Rational(9, 10), Rational(11, 10)};
    for (const Rational& eps : {Rational(1, 4), Rational(1), Rational(4)}) {
      // 2 sqrt(eps) is rational for these eps
      const Rational radius = eps == Rational(1, 4) ? Rational(1) : eps == Rational(1) ? Rational(2) : Rational(4);
      int gap_probes = 0;
      for (const Rational& frac : fractions) {
        for (int sign : {1, -1}) {
          const auto [sub, enl] = verify(eps, sign * frac * radius);
          gap_probes += enl && !sub;
        }
      }
      o.check(gap_probes > 0, "no probe in the gap at eps " + eps.get_str());
    }
    const auto [sub, enl] = verify(Rational(1, 2), Rational(6, 5));
    o.check(!sub && enl, "x* = 1.2 at eps = 0.5");
  });
}

bool c6() {
  return criterion(6, "phi vanishes on T^vdash and T cap T^vdash is the zero-duality locus, 200 instances",
                   [](Outcome& o) {
    double worst = 0;
    for (Seed i = 0; i < 200; ++i) {
      const std::size_t n = dim(i);
      const auto t = gen::gen_maximal_monotone(n, derive_seed(10, i));
      const std::string at = " at instance " + std::to_string(i);
      const auto te = Operator<Rational>::linear(t);
      const auto tf = convert_operator<double>(te);
      for (const auto& b : vdash(t).basis_points()) {
        const auto exact = fitz_linear(te, b);
        o.check(exact.is_finite() && exact.value() == 0, "exact phi nonzero on T^vdash" + at);
        const auto fl = fitz_linear(tf, convert_point<double>(b));
        worst = std::max(worst, fl.is_finite() ? std::abs(fl.value()) : INFINITY);
      }
      o.check(intersect(t, vdash(t)) == oracle::zero_duality_locus(t), "T cap T^vdash differs from the locus" + at);
    }
    o.note << "worst float |phi| on T^vdash basis " << worst << "; ";
    o.check(worst <= 1e-9, "float phi on T^vdash");
  });
}

bool c7() {
  return criterion(7, "self-cancelling, dual-maximality, sign and skew properties, 200 trials each", [](Outcome& o) {
    std::size_t nontrivial_duals = 0;
    for (Seed i = 0; i < 200; ++i) {
      const std::size_t n = dim(i);
      Rng rng(derive_seed(11, i));
      const std::string at = " at trial " + std::to_string(i);

      const auto a = gen::gen_self_cancelling(n, static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n))),
                                              derive_seed(12, i));
      o.check(contains(vdash(a), a), "A not inside A^vdash" + at);

      const auto b = rng.coin() ? gen::gen_max_self_cancelling(n, derive_seed(13, i)) : a;
      if (lemma31_shortcut(b)) {
        ++nontrivial_duals;
        const auto d = vdash(b);
        o.check(d.dim() == n && is_maximal_monotone_linear(Operator<Rational>::linear(d)),
                "monotone A^vdash not maximal" + at);
      }

      const auto m = gen::gen_max_self_cancelling(n, derive_seed(14, i));
      o.check(classify_dual_sign(vdash(m)) != SignTag::Neither, "sign classification reached Neither" + at);
      o.check(disambiguate_sign(m) != SignTag::Neither, "disambiguation reached Neither" + at);

      Subspace<Rational> l = gen::gen_subspace(n, derive_seed(15, i));
      switch (rng.uniform_int(0, 3)) {
        case 0: l = gen::gen_skew(n, derive_seed(16, i)); break;
        case 1: l = gen::gen_max_self_cancelling(n, derive_seed(16, i)); break;
        case 2: l = gen::gen_self_cancelling(n, n > 1 ? n - 1 : 0, derive_seed(16, i)); break;
        default: break;
      }
      o.check(is_skew(l) == is_maximal_self_cancelling(l), "is_skew and maximal self-cancelling differ" + at);
    }
    o.note << nontrivial_duals << " trials with monotone A^vdash; ";
    o.check(nontrivial_duals >= 50, "too few monotone duals exercised");
  });
}

bool c8() {
  return criterion(8, "verdicts, memberships and witnesses under 50 translations per instance", [](Outcome& o) {
    std::size_t translations = 0;
    for (Seed i = 0; i < 24; ++i) {
      const std::size_t n = dim(i);
      const Seed s = derive_seed(17, i);
      const Subspace<Rational> t0 = i % 3 == 0   ? gen::gen_skew(n, s)
                                    : i % 3 == 1 ? Subspace<Rational>::graph(gen::gen_psd(n, s))
                                                 : gen::gen_maximal_monotone(n, s);
      const auto base = Operator<Rational>::linear(t0);
      const auto v0 = decide_non_enlargeable(base);
      Rng rng(derive_seed(18, i));
      for (Seed j = 0; j < 50; ++j, ++translations) {
        const auto t = gen::gen_point(n, derive_seed(19, i, j), 4, 3);
        const auto moved = translate(base, t);
        const std::string at = " at instance " + std::to_string(i) + ", translation " + std::to_string(j);
        const auto v = decide_non_enlargeable(moved);
        o.check(v.non_enlargeable() == v0.non_enlargeable(), "verdict changed" + at);
        if (v.non_enlargeable() && v0.non_enlargeable()) {
          o.check(v.certificate().pre_dual == v0.certificate().pre_dual, "certificate changed" + at);
          o.check(moved.contains_point(v.certificate().base_point), "base point outside T + t" + at);
        } else if (!v.non_enlargeable() && !v0.non_enlargeable()) {
          // a translation inside T0 is absorbed and the witness does not move
          const auto shift = member(t0, t) ? PairedPoint<Rational>::zero(n) : t;
          o.check(v.enlargement().witness == v0.enlargement().witness + shift, "witness did not shift by t" + at);
          o.check(v.enlargement().witness_eps == v0.enlargement().witness_eps, "witness eps changed" + at);
        }
        const auto p = probe(rng, t0, PairedPoint<Rational>::zero(n), derive_seed(20, i, j));
        const Rational eps = quarter(rng.uniform_int(0, 12));
        o.check(in_enlargement_def(base, p, eps) == in_enlargement_def(moved, p + t, eps), "definition membership" + at);
        o.check(in_enlargement_fitz(base, p, eps) == in_enlargement_fitz(moved, p + t, eps), "Fitzpatrick membership" + at);
      }
    }
    o.note << translations << " translations; ";
  });
}

const char* mode_name(ArithMode m) { return m == ArithMode::Float ? "float" : "exact"; }

bool c9() {
  return criterion(9, "full suite passes, float < 60 s and exact < 10 min", [](Outcome& o) {
    for (ArithMode mode : {ArithMode::Float, ArithMode::Exact}) {
      suite::SuiteOptions options;
      options.mode = mode;
      const auto t0 = std::chrono::steady_clock::now();
      const auto report = suite::run_suite(options);
      const double secs = seconds_since(t0);
      const double limit = mode == ArithMode::Float ? 60.0 : 600.0;
      o.note << mode_name(mode) << " " << secs << " s, " << report.failures() << " failing properties; ";
      o.check(report.passed(), std::string(mode_name(mode)) + " suite failed:\n" + suite::format_report(report, false));
      o.check(secs < limit, std::string(mode_name(mode)) + " suite too slow");
    }
  });
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9};
  int failed = 0;
  for (const auto& c : criteria) failed += c() ? 0 : 1;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
