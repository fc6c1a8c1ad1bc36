#pragma once

#include <gmpxx.h>

#include <string>

namespace toricic {

using Integer = mpz_class;
/// mpq_class keeps values canonical: denominator positive, gcd 1.
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "3", "-2", or "5/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text);

}  // namespace toricic
