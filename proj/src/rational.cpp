#include "tautring/rational.hpp"

#include <cctype>

namespace tautring {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  Integer num, den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(s, num)
                : parse_integer(trim(s.substr(0, slash)), num) &&
                      parse_integer(trim(s.substr(slash + 1)), den) && den > 0;
  if (!ok) throw UsageError("malformed rational '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace tautring
