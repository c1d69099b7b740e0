#include "spschub/numeric.hpp"

#include <cctype>

#include "spschub/error.hpp"

namespace spschub {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer decimal(std::string_view s) {
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return Integer(text, 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  const auto s = trim(text);
  if (!is_decimal(s)) fail(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
  return decimal(s);
}

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_decimal(num) || !is_decimal(den))
    fail(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  Integer d = decimal(den);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(decimal(num), d);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

}  // namespace spschub
