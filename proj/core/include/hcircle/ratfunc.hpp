#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcircle/numfield.hpp"

namespace hcircle {

/// Univariate rational function num/den over a number field, kept in canonical
/// form: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(NFElement()), den_(NFPoly::constant(NFElement(1L))) {}
  /// Normalizes; throws ArithmeticError on a zero denominator.
  RatFunc(const NFPoly& num, const NFPoly& den);
  explicit RatFunc(const NFPoly& poly);

  /// Wraps a pair that is already canonical (coprime, den monic) without re-checking.
  static RatFunc from_canonical(NFPoly num, NFPoly den);

  const NFPoly& num() const { return num_; }
  const NFPoly& den() const { return den_; }
  FieldRef field() const { return den_.zero().field(); }
  /// max(deg num, deg den)
  int degree() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Coefficient-wise embedding into a larger field.
  RatFunc embed_into(const FieldRef& field) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const NFElement& c);
  /// Equality as rational functions (cross-multiplication).
  friend bool operator==(const RatFunc& a, const RatFunc& b);

 private:
  NFPoly num_;
  NFPoly den_;
};

RatFunc rf_normalize(const NFPoly& num, const NFPoly& den);

/// f(t0), or nullopt at a pole.
std::optional<NFElement> rf_eval(const RatFunc& f, const NFElement& t0);

/// Value at t = infinity: lc ratio when deg num = deg den, 0 when deg num < deg den,
/// nullopt (a pole) when deg num > deg den.
std::optional<NFElement> rf_value_at_infinity(const RatFunc& f);

/// (a t + b) / (c t + d), stored projectively.
struct MoebiusTransform {
  NFElement a, b, c, d;

  static MoebiusTransform identity(const FieldRef& field);
  FieldRef field() const;
  NFElement determinant() const { return a * d - b * c; }
  std::optional<NFElement> operator()(const NFElement& t) const;
  RatFunc as_ratfunc() const;
  /// (a, b, c, d) proportional to the other transform's coefficients.
  bool projectively_equal(const MoebiusTransform& other) const;
};

/// f(u(t)), normalized; degree is preserved.
RatFunc rf_compose_moebius(const RatFunc& f, const MoebiusTransform& u);

/// The unique u with u(t_k) = s_k for three pairs with distinct t's and distinct s's.
/// Throws ArithmeticError on degenerate input.
MoebiusTransform moebius_from_three_points(const std::array<std::pair<NFElement, NFElement>, 3>& pairs);

/// A tuple of rational functions over a common field.
class Parametrization {
 public:
  Parametrization() = default;
  /// Components are embedded into `field`.
  Parametrization(FieldRef field, std::vector<RatFunc> components);

  const FieldRef& field() const { return field_; }
  const std::vector<RatFunc>& components() const { return components_; }
  const RatFunc& operator[](std::size_t i) const { return components_[i]; }
  std::size_t ambient_dim() const { return components_.size(); }
  /// Degree of t -> (psi_1, ..., psi_m) written over the common denominator:
  /// max(deg lcm(den_i), deg of each numerator rescaled to that denominator).
  int degree() const;
  /// Largest component degree.
  int max_component_degree() const;

 private:
  FieldRef field_;
  std::vector<RatFunc> components_;
};

/// psi^sigma for the class: coefficients mapped by a -> a_i, landing in the relative field.
Parametrization conjugate(const Parametrization& psi, const ConjugacyClass& cls);
RatFunc conjugate(const RatFunc& f, const FieldRef& field, const NFElement& root);

/// Exact equality of two parametrizations component by component.
bool same_parametrization(const Parametrization& a, const Parametrization& b);

std::string to_string(const NFPoly& p, const std::string& var = "t");
std::string to_string(const RatFunc& f, const std::string& var = "t");
std::string to_string(const MoebiusTransform& u, const std::string& var = "t");

}  // namespace hcircle
