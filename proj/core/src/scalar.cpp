#include "enlarge/scalar.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "enlarge/error.hpp"

namespace enlarge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NegativeEpsilon: return "NegativeEpsilon";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotMaximalMonotone: return "NotMaximalMonotone";
    case ErrorCode::NotSelfCancelling: return "NotSelfCancelling";
    case ErrorCode::NotMaximalSelfCancelling: return "NotMaximalSelfCancelling";
    case ErrorCode::DualNotMonotone: return "DualNotMonotone";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_number(std::string_view text) {
  fail(ErrorCode::ParseError, "malformed number '" + std::string(text) + "'");
}

Rational parse_signed_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_number(whole);
  mpz_class z(std::string(s), 10);
  return Rational(neg ? mpz_class(-z) : z);
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) bad_number(text);
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = parse_signed_integer(std::string_view(s).substr(0, slash), text);
    const std::string_view den_text = std::string_view(s).substr(slash + 1);
    if (!all_digits(den_text)) bad_number(text);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(num.get_num(), den);
    q.canonicalize();
    return q;
  }
  // decimal: [sign] digits [. digits] [(e|E) [sign] digits]
  std::string_view body = s;
  bool neg = false;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view etext = body.substr(epos + 1);
    body = body.substr(0, epos);
    if (!etext.empty() && etext[0] == '+') etext.remove_prefix(1);
    const auto* first = etext.data();
    const auto* last = etext.data() + etext.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || etext.empty()) bad_number(text);
    if (exponent > 4000 || exponent < -4000) bad_number(text);
  }
  std::string digits;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = body.substr(0, dot);
    const std::string_view fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      bad_number(text);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) bad_number(text);
    digits = std::string(body);
  }
  if (digits.empty()) bad_number(text);
  Rational q(mpz_class(digits, 10));
  q *= pow10(exponent);
  if (neg) q = -q;
  q.canonicalize();
  return q;
}

std::string format_scalar(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string format_scalar(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

double to_double(const Rational& v) {
  const double d = v.get_d();
  if (!std::isfinite(d)) return d;
  double best = d;
  Rational best_err = abs(Rational(d) - v);
  for (const double c : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
    if (!std::isfinite(c)) continue;
    const Rational err = abs(Rational(c) - v);
    if (err < best_err) {
      best = c;
      best_err = err;
    }
  }
  return best;
}

}  // namespace enlarge
