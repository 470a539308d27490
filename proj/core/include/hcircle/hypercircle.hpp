#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcircle/error.hpp"
#include "hcircle/numfield.hpp"
#include "hcircle/ratfunc.hpp"

namespace hcircle {

/// Raised when the parameter budget runs out without a decision; only possible
/// for inputs that are not proper parametrizations.
class BudgetExhausted : public InputError {
 public:
  using InputError::InputError;
};

enum class Outcome { Good, BadDenominator, NotAttained, Singular };

std::string to_string(Outcome o);

struct ParameterVerdict {
  Rational parameter;
  Outcome outcome = Outcome::Singular;
  std::optional<NFElement> s;  // set for Good only
};

/// Classifies the sample t_k for recovering u with psi(t) = psi_sigma(u(t)).
ParameterVerdict classify_parameter(const Parametrization& psi, const Parametrization& psi_sigma,
                                    const Rational& t_k);

/// d^2 - 2d + n + 4
int parameter_budget(int degree, int extension_degree);

struct UComputation {
  std::optional<MoebiusTransform> u;      // unset when two NotAttained parameters were found
  std::vector<ParameterVerdict> verdicts;  // every parameter tried, in order
  std::vector<Rational> not_attained;
};

/// Samples t = 0, 1, 2, ... until three Good verdicts with distinct images (u fitted)
/// or two NotAttained verdicts (negative certificate). Throws BudgetExhausted after
/// `budget` parameters.
UComputation compute_u(const Parametrization& psi, const Parametrization& psi_sigma, int budget);

/// Convenience form: conjugates psi by the class and uses the standard budget.
UComputation compute_u_for_class(const Parametrization& psi, const ConjugacyClass& cls);

/// psi == psi_sigma o u, by symbolic composition and cross-multiplication.
bool verify_identity(const Parametrization& psi, const Parametrization& psi_sigma, const MoebiusTransform& u);

/// Polynomial in x of degree < n with rational functions of t as coefficients.
struct XRatPoly {
  std::vector<RatFunc> coeffs;  // coefficient of x^j

  friend XRatPoly operator+(const XRatPoly& a, const XRatPoly& b);
  friend bool operator==(const XRatPoly& a, const XRatPoly& b);
};

std::string to_string(const XRatPoly& p);

/// v = sum_j num[j](t) x^j / den(t), with den linear (or constant) in t.
struct LagrangeTerm {
  std::vector<NFPoly> num;
  NFPoly den;
};

/// v = m(a_i, x) / m(a_i, a_i) * u(t), where m(a_i, x) = M(x) / (x - a_i) is
/// obtained by synthetic division inside the class field.
LagrangeTerm lagrange_term(const ConjugacyClass& cls, const MoebiusTransform& u, const NFPoly& m_alpha_x);

/// Coefficient-wise trace of v down to the base of the class field.
XRatPoly trace_term(const LagrangeTerm& v);

/// F accumulated over the classes.
class LagrangeAccumulator {
 public:
  explicit LagrangeAccumulator(int n) : f_{std::vector<RatFunc>(static_cast<std::size_t>(n))} {}
  void add(const XRatPoly& w);
  const XRatPoly& value() const { return f_; }

 private:
  XRatPoly f_;
};

enum class ClassStatus { Fixing, NotAttainedTwice, IdentityFailed };

std::string to_string(ClassStatus s);

struct ClassReport {
  ConjugacyClass cls;
  bool identity = false;  // the class {a} itself
  ClassStatus status = ClassStatus::Fixing;
  std::optional<MoebiusTransform> u;
  std::vector<ParameterVerdict> verdicts;
  std::vector<Rational> not_attained;
  std::optional<XRatPoly> term;  // trace term added to F (identity: the seed)
};

struct HypercircleResult {
  bool defined = false;
  Parametrization phi;                 // set when defined
  NFPoly m_alpha_x;                    // M(x) / (x - a)
  std::vector<ClassReport> classes;    // identity first, then factors of m(a, x)

  std::vector<ConjugacyClass> fixing_classes() const;
  /// First class whose automorphism moves the curve, if any.
  const ClassReport* certificate() const;
  /// Largest number of parameters tried for a single class.
  int max_params_tried() const;
  int total_params_tried() const;
};

/// The identity class: the root a of x - a over its own field.
ConjugacyClass identity_class(const FieldRef& field);

/// Conjugacy classes of the roots of m(a, x) over K(a), from its factorization.
std::vector<ConjugacyClass> conjugacy_classes(const FieldRef& field, NFPoly* m_alpha_x = nullptr);

/// Full computation over E = psi.field(), whose generator a has minimal polynomial M
/// over E's base. Every class is processed so the set of fixing classes is complete.
HypercircleResult standard_parametrization(const Parametrization& psi);

/// Same, after checking that psi.field() is Q[x]/(M).
HypercircleResult standard_parametrization(const Parametrization& psi, const UniPoly<Rational>& M);

}  // namespace hcircle
