#include "rackhopf/rational.hpp"

#include <cctype>

#include "rackhopf/errors.hpp"

namespace rackhopf {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw InvalidInput("malformed rational literal '" + s + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw InvalidInput("malformed rational literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw InvalidInput("malformed rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw InvalidInput("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace rackhopf
