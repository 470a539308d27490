#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcircle/numfield.hpp"
#include "hcircle/ratfunc.hpp"

namespace hcircle {

/// Sparse multivariate polynomial over Q; keys are exponent vectors.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const Rational& c);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

std::string to_string(const MPoly& p);

/// psi_j(sum a^i t_i) = sum_i a^i F_ij / D with F_ij, D in Q[t_0, ..., t_{n-1}].
struct WeilSystem {
  std::size_t n = 0;
  std::vector<std::vector<MPoly>> lambda_num;  // lambda_num[j][i] = F_ij (all i, including 0)
  MPoly denominator;                           // D

  /// The defining polynomials F_ij, i >= 1.
  std::vector<MPoly> F_polys() const;
};

/// Weil substitution for n = deg M <= 3 and degree <= 6; throws InputError beyond that.
WeilSystem weil_substitution(const Parametrization& psi, const UniPoly<Rational>& M);

/// Substitutes the homogenized rational functions phi into p; returns the numerator.
NFPoly substitute(const MPoly& p, const Parametrization& phi);

/// Every F_ij(phi) vanishes identically and D(phi) does not.
bool check_on_witness(const WeilSystem& system, const Parametrization& phi);

/// D(phi) is not the zero rational function.
bool denominator_nonvanishing(const WeilSystem& system, const Parametrization& phi);

}  // namespace hcircle
