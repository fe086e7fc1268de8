#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rackhopf {

using Rational = mpq_class;

// Canonical fraction string: "p/q" in lowest terms, "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; throws InvalidInput on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

}  // namespace rackhopf
