#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curvegraph {

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
///
/// Beware of `auto` with GMP arithmetic: `auto s = a + b;` binds an
/// expression template, not a value. Spell out `Rational`.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal, q > 0). Throws Error{parse_error}.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers keep the "/1".
std::string to_string(const Rational& value);

inline Rational rational(long numerator, long denominator = 1) {
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace curvegraph
