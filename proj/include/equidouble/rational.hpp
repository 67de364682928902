#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace equidouble {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// num/den in lowest terms.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws ConstructionError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace equidouble
