#include "enlarge/document.hpp"

#include <yaml-cpp/yaml.h>

#include <sstream>

namespace enlarge::io {
namespace {

[[noreturn]] void parse_fail(const YAML::Node& node, const std::string& field, const std::string& what) {
  std::string where;
  if (node.IsDefined() && node.Mark().line >= 0) where = "line " + std::to_string(node.Mark().line + 1) + ", ";
  fail(ErrorCode::ParseError, where + "field '" + field + "': " + what);
}

Rational number(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) parse_fail(node, field, "expected a number");
  try {
    return parse_rational(node.Scalar());
  } catch (const Error& e) {
    parse_fail(node, field, e.what());
  }
}

Vec<Rational> number_list(const YAML::Node& node, const std::string& field, std::size_t expected) {
  if (!node.IsSequence()) parse_fail(node, field, "expected a list of numbers");
  if (node.size() != expected)
    parse_fail(node, field, "expected " + std::to_string(expected) + " numbers, got " + std::to_string(node.size()));
  Vec<Rational> out;
  out.reserve(expected);
  for (const auto& e : node) out.push_back(number(e, field));
  return out;
}

PairedPoint<Rational> pair(const YAML::Node& node, const std::string& field, std::size_t n) {
  if (!node.IsSequence() || node.size() != 2) parse_fail(node, field, "expected [x-list, xstar-list]");
  return PairedPoint<Rational>(number_list(node[0], field + ".x", n), number_list(node[1], field + ".xstar", n));
}

template <Field F>
void emit_row(std::ostream& os, std::span<const F> row) {
  os << '[';
  for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << '"' << format_scalar(row[j]) << '"';
  os << ']';
}

template <Field F>
std::string point_text(const PairedPoint<F>& p) {
  std::ostringstream os;
  os << '[';
  emit_row<F>(os, std::span<const F>(p.x));
  os << ", ";
  emit_row<F>(os, std::span<const F>(p.xstar));
  os << ']';
  return os.str();
}

template <Field F>
std::string emit(const Operator<F>& t) {
  std::ostringstream os;
  os << "kind: " << to_string(t.kind()) << '\n' << "n: " << t.n() << '\n';
  if (t.is_finite()) {
    os << "pairs:\n";
    for (const auto& p : t.points()) os << "  - " << point_text(p) << '\n';
    return os.str();
  }
  const auto& basis = t.linear_part().basis();
  os << "basis:" << (basis.rows() == 0 ? " []" : "") << '\n';
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    os << "  - ";
    emit_row<F>(os, basis.row(i));
    os << '\n';
  }
  if (t.kind() == OperatorKind::Affine) os << "translation: " << point_text(t.translation()) << '\n';
  return os.str();
}

}  // namespace

ParsedOperator parse_operator(std::string_view text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    fail(ErrorCode::ParseError, "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (!doc.IsMap()) fail(ErrorCode::ParseError, "document must be a mapping with 'kind' and 'n'");
  const YAML::Node kind_node = doc["kind"];
  if (!kind_node || !kind_node.IsScalar()) parse_fail(doc, "kind", "missing (finite | linear | affine)");
  const std::string kind = kind_node.Scalar();
  const YAML::Node n_node = doc["n"];
  if (!n_node || !n_node.IsScalar()) parse_fail(doc, "n", "missing positive integer");
  const Rational n_value = number(n_node, "n");
  if (n_value.get_den() != 1 || n_value < 1 || n_value > 64) parse_fail(n_node, "n", "expected a positive integer");
  const auto n = static_cast<std::size_t>(n_value.get_num().get_ui());

  ParsedOperator out{Operator<Rational>::linear(Subspace<Rational>(n)), {}};
  if (kind == "finite") {
    const YAML::Node pairs = doc["pairs"];
    if (!pairs || !pairs.IsSequence() || pairs.size() == 0) parse_fail(doc, "pairs", "expected a non-empty list");
    std::vector<PairedPoint<Rational>> pts;
    for (std::size_t i = 0; i < pairs.size(); ++i) pts.push_back(pair(pairs[i], "pairs[" + std::to_string(i) + "]", n));
    const std::size_t given = pts.size();
    out.op = Operator<Rational>::finite(std::move(pts));
    if (out.op.points().size() != given) out.warnings.push_back("duplicate pairs removed");
    return out;
  }
  if (kind != "linear" && kind != "affine") parse_fail(kind_node, "kind", "unknown kind '" + kind + "'");
  const YAML::Node basis = doc["basis"];
  if (!basis || !basis.IsSequence()) parse_fail(doc, "basis", "expected a list of rows");
  std::vector<Vec<Rational>> rows;
  for (std::size_t i = 0; i < basis.size(); ++i)
    rows.push_back(number_list(basis[i], "basis[" + std::to_string(i) + "]", 2 * n));
  Subspace<Rational> s = Subspace<Rational>::span(rows, n);
  if (s.dim() != rows.size())
    out.warnings.push_back("basis rows are linearly dependent; using their span (dimension " +
                           std::to_string(s.dim()) + ")");
  if (kind == "linear") {
    if (doc["translation"]) out.warnings.push_back("'translation' ignored for kind linear");
    out.op = Operator<Rational>::linear(std::move(s));
    return out;
  }
  const YAML::Node tr = doc["translation"];
  if (!tr) parse_fail(doc, "translation", "required for kind affine");
  out.op = Operator<Rational>::affine(std::move(s), pair(tr, "translation", n));
  if (out.op.kind() == OperatorKind::Linear)
    out.warnings.push_back("translation lies in the subspace; operator is linear");
  return out;
}

std::string emit_operator(const Operator<Rational>& t) { return emit(t); }
std::string emit_operator(const Operator<double>& t) { return emit(t); }

PairedPoint<Rational> parse_point(std::string_view text, std::size_t n) {
  std::string s(text);
  std::vector<std::string> tokens;
  std::string cur;
  std::size_t split_at = std::string::npos;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == ';' || ch == '[' || ch == ']' || ch == '(' || ch == ')') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
      if (ch == ';') {
        if (split_at != std::string::npos) fail(ErrorCode::ParseError, "point has more than one ';'");
        split_at = tokens.size();
      }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.size() != 2 * n)
    fail(ErrorCode::ParseError, "point needs 2n = " + std::to_string(2 * n) + " numbers, got " +
                                    std::to_string(tokens.size()));
  if (split_at != std::string::npos && split_at != n)
    fail(ErrorCode::ParseError, "';' must separate n numbers of x from n numbers of x*");
  Vec<Rational> v;
  for (const auto& tok : tokens) v.push_back(parse_rational(tok));
  return PairedPoint<Rational>::from_concat(v);
}

std::string format_point(const PairedPoint<Rational>& p) { return point_text(p); }
std::string format_point(const PairedPoint<double>& p) { return point_text(p); }

}  // namespace enlarge::io
