#pragma once

#include <vector>

#include "hcircle/hypercircle.hpp"
#include "hcircle/linalg.hpp"
#include "hcircle/numfield.hpp"

namespace hcircle {

/// Subfield L of K(a) given as a Q-subspace plus a primitive element.
struct FixedField {
  FieldRef field;                     // K(a)
  std::vector<NFElement> basis;       // Q-basis of L inside K(a)
  NFElement primitive;                // generates L over Q
  UniPoly<Rational> primitive_minpoly{Rational(0)};
  int relative_degree = 1;            // [K(a) : L]

  int degree() const { return static_cast<int>(basis.size()); }
  /// True when x lies in L.
  bool contains(const NFElement& x) const;
};

/// Homogeneous Q-linear conditions on the flat coordinates of x in K(a) expressing
/// sigma_i(x) = x for the class automorphism a -> a_i.
Matrix<Rational> invariance_system(const ConjugacyClass& cls);

/// Intersection of the fixed spaces of the given classes, with a primitive element.
FixedField minimum_field(const std::vector<ConjugacyClass>& fixing_classes);

/// Convenience: the fixing classes recorded by a hypercircle run.
FixedField minimum_field(const HypercircleResult& result);

/// K(a) rewritten as L(a): the field L = Q(gamma), the relative extension L[y]/(mu) with
/// mu the minimal polynomial of a over L, and psi transported along a -> y.
struct RelativeView {
  FieldRef subfield;        // Q(gamma)
  FieldRef extension;       // L(a)
  Parametrization psi;      // over `extension`
};

RelativeView view_over_subfield(const Parametrization& psi, const FixedField& l);

}  // namespace hcircle
