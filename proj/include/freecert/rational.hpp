#pragma once

#include <gmpxx.h>

#include <string>

#include "freecert/errors.hpp"

namespace freecert {

/// Exact rational number. GMP keeps values canonical (gcd 1, positive
/// denominator, zero as 0/1), which is exactly the invariant we need.
using Rational = mpq_class;

/// Parses "p/q" or "p" with arbitrary-precision integers. The result is
/// canonicalized; a zero denominator is rejected.
Rational rational_from_string(const std::string& text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace freecert
