#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "enlarge/operator.hpp"

// Operator documents: YAML mappings with explicit `kind` and `n`.
//
//   kind: affine          # finite | linear | affine
//   n: 1
//   basis:                # linear / affine: rows of length 2n, (x | x*)
//     - ["0", "1"]
//   translation: [["2"], ["0"]]   # affine: [x-list, xstar-list]
//
//   kind: finite
//   n: 2
//   pairs:                # finite: list of [x-list, xstar-list]
//     - [["0", "0"], ["0", "0"]]
//
// Numbers are decimal strings ("0.25", "-3", "1e-2") or rationals ("p/q");
// unquoted YAML numbers are accepted too. Parsing is exact.
namespace enlarge::io {

struct ParsedOperator {
  Operator<Rational> op;
  std::vector<std::string> warnings;
};

/// Throws Error(ParseError) with the offending line and field in the message.
ParsedOperator parse_operator(std::string_view text);

/// Canonical document; parse_operator(emit_operator(T)).op is T exactly.
std::string emit_operator(const Operator<Rational>& t);
std::string emit_operator(const Operator<double>& t);

/// "x1,...,xn;x*1,...,x*n" or 2n comma/space separated numbers (x then x*).
PairedPoint<Rational> parse_point(std::string_view text, std::size_t n);

/// [[x...], [x*...]] in flow style.
std::string format_point(const PairedPoint<Rational>& p);
std::string format_point(const PairedPoint<double>& p);

}  // namespace enlarge::io
