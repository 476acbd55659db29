#include "enlarge_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "enlarge/document.hpp"
#include "enlarge/enlargeability.hpp"
#include "enlarge/fitzpatrick.hpp"
#include "enlarge/generators.hpp"
#include "enlarge/suite.hpp"

namespace enlarge::cli {
namespace {

struct ModeFlags {
  bool exact = false;
  bool floating = false;
};

void add_mode_flags(CLI::App* cmd, ModeFlags& flags) {
  auto* e = cmd->add_flag("--exact", flags.exact, "rational arithmetic");
  auto* f = cmd->add_flag("--float", flags.floating, "double arithmetic with tolerance 1e-9");
  e->excludes(f);
}

ArithMode env_mode(ArithMode fallback) {
  const char* v = std::getenv(kArithEnv);
  if (v == nullptr || *v == '\0') return fallback;
  const std::string s(v);
  if (s == "exact") return ArithMode::Exact;
  if (s == "float") return ArithMode::Float;
  fail(ErrorCode::InvalidArgument, std::string(kArithEnv) + " must be 'exact' or 'float', got '" + s + "'");
}

ArithMode resolve_mode(const ModeFlags& flags, ArithMode fallback) {
  if (flags.exact) return ArithMode::Exact;
  if (flags.floating) return ArithMode::Float;
  return env_mode(fallback);
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  require(in.good(), ErrorCode::InvalidArgument, "cannot read file '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

Operator<Rational> load(const std::string& path, std::ostream& err) {
  io::ParsedOperator parsed = io::parse_operator(read_input(path));
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  return std::move(parsed.op);
}

template <Field F>
Operator<F> in_mode(const Operator<Rational>& t) {
  if constexpr (is_exact_v<F>) return t;
  else return convert_operator<F>(t);
}

template <Field F>
PairedPoint<F> in_mode(const PairedPoint<Rational>& p) {
  if constexpr (is_exact_v<F>) return p;
  else return convert_point<F>(p);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

template <Field F>
int run_check(const Operator<Rational>& doc, std::ostream& out) {
  const Operator<F> t = in_mode<F>(doc);
  out << "kind: " << to_string(t.kind()) << '\n';
  out << "n: " << t.n() << '\n';
  out << "monotone: " << yes_no(is_monotone(t)) << '\n';
  if (t.is_finite()) return kExitOk;
  const Subspace<F>& l = t.linear_part();
  out << "dim: " << l.dim() << '\n';
  out << "maximal_monotone: " << yes_no(is_maximal_monotone_linear(t)) << '\n';
  out << "self_cancelling: " << yes_no(is_self_cancelling(l)) << '\n';
  out << "maximal_self_cancelling: " << yes_no(is_maximal_self_cancelling(l)) << '\n';
  out << "skew: " << yes_no(is_skew(l)) << '\n';
  return kExitOk;
}

template <Field F>
int run_vdash(const Operator<Rational>& doc, std::ostream& out, std::ostream& err) {
  const Operator<F> t = in_mode<F>(doc);
  require(!t.is_finite(), ErrorCode::InvalidArgument, "vdash needs a linear or affine document");
  if (t.kind() == OperatorKind::Affine) err << "warning: translation ignored; annihilating the linear part\n";
  out << io::emit_operator(Operator<F>::linear(vdash(t.linear_part())));
  return kExitOk;
}

template <Field F>
int run_fitz(const Operator<Rational>& doc, const std::string& point, std::ostream& out) {
  const Operator<F> t = in_mode<F>(doc);
  const PairedPoint<F> p = in_mode<F>(io::parse_point(point, doc.n()));
  const ExtReal<F> v = t.is_finite() ? fitz_finite(t, p) : fitz_linear(t, p);
  out << "phi: " << v.str() << '\n';
  out << "duality: " << format_scalar(duality(p)) << '\n';
  return kExitOk;
}

template <Field F>
int run_enlarge(const Operator<Rational>& doc, const std::string& point, const std::string& eps_text,
                std::ostream& out) {
  const Operator<F> t = in_mode<F>(doc);
  const PairedPoint<F> p = in_mode<F>(io::parse_point(point, doc.n()));
  const F eps = convert_scalar<F>(parse_rational(eps_text));
  const bool def = in_enlargement_def(t, p, eps);
  const char* word[] = {"non-member", "member"};
  out << "definition: " << word[def] << '\n';
  if (t.is_finite()) {
    out << "fitzpatrick: n/a\n";
    out << "verdict: " << word[def] << " (definition)\n";
    return kExitOk;
  }
  const bool fitz = in_enlargement_fitz(t, p, eps);
  out << "fitzpatrick: " << word[fitz] << '\n';
  if (def != fitz) {
    out << "verdict: routes disagree\n";
    return kExitFailure;
  }
  out << "verdict: " << word[def] << " (both routes)\n";
  return kExitOk;
}

template <Field F>
int run_decide(const Operator<Rational>& doc, std::ostream& out) {
  const Verdict<F> v = decide_non_enlargeable(in_mode<F>(doc));
  if (v.non_enlargeable()) {
    const auto& c = v.certificate();
    out << "verdict: non-enlargeable\n";
    out << "base_point: " << io::format_point(c.base_point) << '\n';
    out << "pre_dual:\n";
    std::istringstream lines(io::emit_operator(Operator<F>::linear(c.pre_dual)));
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
    return kExitOk;
  }
  const auto& e = v.enlargement();
  out << "verdict: enlargeable\n";
  out << "witness: " << io::format_point(e.witness) << '\n';
  out << "eps: " << format_scalar(e.witness_eps) << '\n';
  out << "phi: " << format_scalar(e.phi_value) << '\n';
  out << "duality: " << format_scalar(e.duality_value) << '\n';
  return kExitOk;
}

template <class Fn>
int dispatch(ArithMode mode, Fn&& fn) {
  if (mode == ArithMode::Exact) return fn.template operator()<Rational>();
  return fn.template operator()<double>();
}

Subspace<Rational> generate(const std::string& family, std::size_t n, gen::Seed seed, std::optional<std::size_t> k) {
  if (family == "skew") return gen::gen_skew(n, seed);
  if (family == "psd") return Subspace<Rational>::graph(gen::gen_psd(n, seed));
  if (family == "mixed") return Subspace<Rational>::graph(gen::gen_mixed(n, seed));
  if (family == "vertical") return gen::gen_vertical(n);
  if (family == "self-cancelling") return gen::gen_self_cancelling(n, k.value_or(n), seed);
  if (family == "maximal-monotone") return gen::gen_maximal_monotone(n, seed);
  if (family == "monotone") return gen::gen_monotone(n, seed);
  if (family == "subspace") return gen::gen_subspace(n, seed);
  fail(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear relations, Fitzpatrick functions and enlargeability of maximal monotone operators", "enlarge"};
  app.require_subcommand(1);

  ModeFlags mode_flags;
  std::string file, point, eps;

  auto* check = app.add_subcommand("check", "Print monotone / maximal / self-cancelling / skew flags");
  check->add_option("file", file, "operator document ('-' for stdin)")->required();
  add_mode_flags(check, mode_flags);

  auto* vd = app.add_subcommand("vdash", "Print the annihilator B^vdash as an operator document");
  vd->add_option("file", file, "operator document ('-' for stdin)")->required();
  add_mode_flags(vd, mode_flags);

  auto* fz = app.add_subcommand("fitz", "Evaluate the Fitzpatrick function at a point");
  fz->add_option("file", file, "operator document ('-' for stdin)")->required();
  fz->add_option("--point", point, "\"x1,..,xn;x*1,..,x*n\"")->required();
  add_mode_flags(fz, mode_flags);

  auto* en = app.add_subcommand("enlarge", "Test membership in the eps-enlargement by both routes");
  en->add_option("file", file, "operator document ('-' for stdin)")->required();
  en->add_option("--point", point, "\"x1,..,xn;x*1,..,x*n\"")->required();
  en->add_option("--eps", eps, "eps >= 0, decimal or p/q")->required();
  add_mode_flags(en, mode_flags);

  auto* de = app.add_subcommand("decide", "Decide non-enlargeability of a maximal monotone operator");
  de->add_option("file", file, "operator document ('-' for stdin)")->required();
  add_mode_flags(de, mode_flags);

  suite::SuiteOptions suite_options;
  bool no_timing = false;
  auto* su = app.add_subcommand("suite", "Run the randomized property suite");
  su->add_option("--trials", suite_options.trials, "trials per property")->check(CLI::PositiveNumber);
  su->add_option("--seed", suite_options.seed, "base seed");
  su->add_option("--threads", suite_options.threads, "worker threads (0: all cores)");
  su->add_option("--only", suite_options.only, "property-name prefixes to run");
  su->add_flag("--no-timing", no_timing, "omit timing fields from the report");
  su->add_flag("--list", "list property names and exit");
  add_mode_flags(su, mode_flags);

  std::string family;
  std::size_t gen_n = 0;
  gen::Seed gen_seed = 0;
  std::optional<std::size_t> gen_k;
  auto* ge = app.add_subcommand("generate", "Emit a random operator document");
  ge->add_option("family", family, "skew | psd | mixed | vertical | self-cancelling | maximal-monotone | monotone | subspace")
      ->required();
  ge->add_option("--n", gen_n, "dimension, 1..8")->required();
  ge->add_option("--seed", gen_seed, "seed");
  ge->add_option("--k", gen_k, "dimension of the self-cancelling family (default n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*su) {
      if (su->count("--list") > 0) {
        for (const auto& name : suite::property_names()) out << name << '\n';
        return kExitOk;
      }
      suite_options.mode = resolve_mode(mode_flags, ArithMode::Float);
      const suite::SuiteReport report = suite::run_suite(suite_options);
      out << suite::format_report(report, !no_timing);
      return report.passed() ? kExitOk : kExitFailure;
    }
    if (*ge) {
      out << io::emit_operator(Operator<Rational>::linear(generate(family, gen_n, gen_seed, gen_k)));
      return kExitOk;
    }

    const ArithMode mode = resolve_mode(mode_flags, ArithMode::Exact);
    const Operator<Rational> doc = load(file, err);
    if (*check) return dispatch(mode, [&]<Field F>() { return run_check<F>(doc, out); });
    if (*vd) return dispatch(mode, [&]<Field F>() { return run_vdash<F>(doc, out, err); });
    if (*fz) return dispatch(mode, [&]<Field F>() { return run_fitz<F>(doc, point, out); });
    if (*en) return dispatch(mode, [&]<Field F>() { return run_enlarge<F>(doc, point, eps, out); });
    if (*de) return dispatch(mode, [&]<Field F>() { return run_decide<F>(doc, out); });
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Internal ? kExitFailure : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace enlarge::cli
