#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hcircle {

/// Arbitrary-precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational zero_of(const Rational&) { return Rational(0); }
inline Rational one_of(const Rational&) { return Rational(1); }

/// Parses "p", "-p" or "p/q". Throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace hcircle
