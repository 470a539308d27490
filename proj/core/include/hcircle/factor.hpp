#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hcircle/numfield.hpp"
#include "hcircle/unipoly.hpp"

namespace hcircle {

template <class K>
using Factorization = std::vector<std::pair<UniPoly<K>, int>>;

/// Monic irreducible factors of f over Q with multiplicities (Zassenhaus).
/// The product of the factors, raised to their multiplicities, times lc(f) is f.
Factorization<Rational> factor_rational(const UniPoly<Rational>& f);

bool is_irreducible(const UniPoly<Rational>& f);

/// Monic irreducible factors of f over `field` (Trager's norm method, applied
/// recursively down the tower). A null field means Q.
Factorization<NFElement> factor_over_nf(const NFPoly& f, const FieldRef& field);

/// Q[x]/(minpoly) after checking that minpoly is irreducible of degree >= 1.
/// Throws InputError("reducible minimal polynomial") otherwise.
FieldRef make_number_field(const UniPoly<Rational>& minpoly, std::string generator_name);

/// base[x]/(minpoly) after an irreducibility check over base.
FieldRef make_relative_field(const FieldRef& base, const NFPoly& minpoly, std::string generator_name);

/// Interpolating polynomial through (xs[i], ys[i]) with distinct rational nodes.
NFPoly interpolate(const std::vector<Rational>& xs, const std::vector<NFElement>& ys, const FieldRef& field);

}  // namespace hcircle
