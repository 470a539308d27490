#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hcircle/rational.hpp"
#include "hcircle/unipoly.hpp"

namespace hcircle {

class NumberField;

/// Shared handle to an immutable field of a tower. A null handle denotes the rationals.
using FieldRef = std::shared_ptr<const NumberField>;

/// [F : Q]; 1 for the rationals.
int absolute_degree(const FieldRef& field);

/// True if `sub` is `field` or one of the fields below it in its tower.
bool is_subfield(const FieldRef& sub, const FieldRef& field);

/// Element of a tower field.
///
/// Coordinates are stored flattened over Q: coordinate i + j * [B : Q] is the
/// i-th rational coordinate of the base-field coefficient of g^j, where g is the
/// field generator and B the base field. Elements of a subfield embed by
/// zero-padding, so mixed-field arithmetic promotes to the larger field.
class NFElement {
 public:
  NFElement() : flat_(1) {}
  NFElement(const Rational& q) : flat_{q} {}  // NOLINT: rationals embed implicitly
  NFElement(long v) : flat_{Rational(v)} {}   // NOLINT
  NFElement(FieldRef field, std::vector<Rational> flat);

  /// Builds sum coeffs[j] * g^j from base-field coordinates.
  static NFElement from_base_coords(const FieldRef& field, std::span<const NFElement> coeffs);

  const FieldRef& field() const { return field_; }
  std::span<const Rational> flat() const { return flat_; }

  /// Base-field coefficient of g^j.
  NFElement coord(int j) const;
  /// Number of base-field coordinates (the relative degree).
  int coord_count() const;

  bool is_zero() const;
  bool is_one() const;
  /// True when all coordinates beyond the rational one vanish.
  bool is_rational() const;
  Rational to_rational() const;
  /// True when the element lies in the base field of its field.
  bool in_base() const;
  /// The element as a member of `sub` (must be a subfield containing it).
  NFElement restrict_to(const FieldRef& sub) const;
  /// The element as a member of `super` (a field above the current one).
  NFElement embed_into(const FieldRef& super) const;

  NFElement inverse() const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a);
  friend NFElement operator*(const NFElement& a, const Rational& q);
  friend bool operator==(const NFElement& a, const NFElement& b);

  NFElement& operator+=(const NFElement& b) { return *this = *this + b; }
  NFElement& operator-=(const NFElement& b) { return *this = *this - b; }
  NFElement& operator*=(const NFElement& b) { return *this = *this * b; }

 private:
  FieldRef field_;
  std::vector<Rational> flat_;
};

inline bool is_zero(const NFElement& x) { return x.is_zero(); }
NFElement zero_of(const NFElement& x);
NFElement one_of(const NFElement& x);

std::string to_string(const NFElement& x);

using NFPoly = UniPoly<NFElement>;

/// Monic gcd over a number field, computed multi-modularly and checked by division.
template <>
NFPoly gcd<NFElement>(NFPoly a, NFPoly b);

/// Simple extension F = B[y]/(m(y)) of a base field B (B = Q when base is null).
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// `minpoly` is taken monic over `base`; irreducibility is the caller's responsibility
  /// (see factor.hpp for a checked constructor).
  static FieldRef make(FieldRef base, const NFPoly& minpoly, std::string generator_name);
  static FieldRef make_over_rationals(const UniPoly<Rational>& minpoly, std::string generator_name);

  const FieldRef& base() const { return base_; }
  int degree() const { return degree_; }
  int absolute_degree() const { return abs_degree_; }
  int base_absolute_degree() const { return base_abs_degree_; }
  int height() const;
  const std::string& generator_name() const { return name_; }
  const NFPoly& minpoly() const { return minpoly_; }

  FieldRef self() const { return shared_from_this(); }
  NFElement zero() const;
  NFElement one() const;
  NFElement generator() const;
  /// Rational q as an element of this field.
  NFElement from_rational(const Rational& q) const;

  /// Power sums s_0..s_{deg-1} of the roots of the minimal polynomial (in the base).
  std::span<const NFElement> newton_sums() const { return newton_; }

  /// Flattened coordinates of the minimal polynomial coefficients (ascending).
  std::span<const std::vector<Rational>> minpoly_flat() const { return minpoly_flat_; }

 private:
  NumberField() = default;

  FieldRef base_;
  NFPoly minpoly_{NFElement()};
  std::vector<std::vector<Rational>> minpoly_flat_;
  std::vector<bool> minpoly_rational_;
  std::vector<NFElement> newton_;
  std::string name_;
  int degree_ = 0;
  int abs_degree_ = 0;
  int base_abs_degree_ = 1;

  friend void mul_flat(const NumberField*, std::span<const Rational>, std::span<const Rational>,
                       std::span<Rational>);
};

/// Zero of the given field (rationals when null).
NFElement field_zero(const FieldRef& field);
NFElement field_one(const FieldRef& field);
/// Zero polynomial over `field`.
NFPoly zero_poly(const FieldRef& field);
/// The polynomial `x` over `field`.
NFPoly x_poly(const FieldRef& field);

/// Converts a polynomial over Q into one over `field`.
NFPoly lift_poly(const UniPoly<Rational>& p, const FieldRef& field);
/// Coefficient-wise embedding of a polynomial into a larger field.
NFPoly embed_poly(const NFPoly& p, const FieldRef& field);
/// Converts a polynomial whose coefficients are all rational back to Q[x].
UniPoly<Rational> to_rational_poly(const NFPoly& p);

/// Relative trace Tr_{F/B}(x) for x in F, computed from Newton sums of the minimal polynomial.
NFElement trace(const NFElement& x);

/// Relative norm N_{F/B}(x) as the resultant Res(m, x(y)).
NFElement norm(const NFElement& x);

/// Matrix of multiplication by x over the base: column j holds the coordinates of x*g^j.
std::vector<std::vector<NFElement>> multiplication_matrix(const NFElement& x);

/// Characteristic polynomial of multiplication by x, monic over the base of x's field.
NFPoly charpoly(const NFElement& x);

/// Replaces the generator of `field` by `image`: sum c_j g^j  ->  sum c_j image^j, where
/// x is first embedded into `field`. The base of `field` must be a subfield of image's field.
NFElement substitute_generator(const NFElement& x, const FieldRef& field, const NFElement& image);

/// An irreducible factor f_i of m(a, x) over K(a) together with K(a)(a_i) = K(a)[y]/f_i.
struct ConjugacyClass {
  NFPoly factor;
  FieldRef relative_field;
  int class_size = 0;

  /// The designated root a_i (the generator of the relative field).
  NFElement root() const { return relative_field->generator(); }
};

/// Builds the class for a monic irreducible factor of m(a, x) over `field`.
ConjugacyClass make_conjugacy_class(const NFPoly& factor, const std::string& root_name);

/// sigma_i(x) for x in K(a): the coefficient map a -> a_i, landing in K(a)(a_i).
NFElement conjugate(const NFElement& x, const ConjugacyClass& cls);
/// Coefficient-wise generator substitution for a polynomial over (a subfield of) `field`.
NFPoly conjugate(const NFPoly& p, const FieldRef& field, const NFElement& root);

}  // namespace hcircle
