#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symop {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so every fraction built from parts goes through here.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// "3", "-1/2"
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "3", "-7", "1/2", "-3/4" into canonical form.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace symop
