#pragma once

// Multi-modular arithmetic in number field towers: reduction modulo word-size
// primes, CRT and rational reconstruction, used for inverses and gcds whose
// rational intermediate results swell.

#include <optional>

#include "hcircle/numfield.hpp"

namespace hcircle::modular {

/// Inverse of a nonzero element, reconstructed from its images modulo primes and
/// checked by one multiplication.
NFElement inverse(const NFElement& x);

/// Monic gcd over the coefficient field, reconstructed from modular images and
/// checked by exact division.
NFPoly gcd(const NFPoly& a, const NFPoly& b);

}  // namespace hcircle::modular
