#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hcircle/numfield.hpp"
#include "hcircle/ratfunc.hpp"

namespace hcircle {

/// A parsed instance file: the field Q[x]/(M) and a parametrization over it.
struct Instance {
  std::string generator = "a";
  UniPoly<Rational> minpoly{Rational(0)};  // monic, irreducible
  FieldRef field;
  Parametrization psi;

  int extension_degree() const { return minpoly.degree(); }
};

/// Field-only part of an instance file: {"generator": ..., "minpoly": [...]}.
struct FieldSpec {
  std::string generator = "a";
  UniPoly<Rational> minpoly{Rational(0)};
};

/// Throws InputError with line and column on malformed text, a reducible minpoly,
/// coefficient vectors of the wrong length or a zero denominator.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// Accepts either a bare field object or a full instance file and returns its field.
FieldSpec parse_field_spec(const std::string& text);
FieldSpec load_field_spec(const std::string& path);

Instance make_instance(const FieldSpec& spec, const std::vector<RatFunc>& components);

enum class InstanceKind { Defined, Twisted, Adversarial };

std::string to_string(InstanceKind k);
InstanceKind parse_instance_kind(const std::string& s);

/// a_k = sum_f coeffs[f] * a_{free[f]} + constant for the adversarial construction.
struct LinearRelation {
  int index = 0;
  std::vector<int> free;
  std::vector<Rational> coeffs;
  NFElement constant;
};

std::string to_string(const LinearRelation& r);

struct GenOptions {
  InstanceKind kind = InstanceKind::Defined;
  int degree = 2;
  std::optional<FieldSpec> field;  // otherwise a random monic minpoly of ext_degree
  int ext_degree = 2;
  std::uint64_t seed = 1;
  int max_attempts = 50;
};

struct GeneratedInstance {
  Instance instance;
  std::vector<LinearRelation> relations;  // adversarial only
  int attempts = 0;
};

/// Deterministic in the options; throws InputError when preconditions fail or the
/// retry budget runs out.
GeneratedInstance gen_instance(const GenOptions& opts);

/// Random monic irreducible polynomial of degree n with small integer coefficients.
UniPoly<Rational> random_minpoly(int n, std::mt19937_64& rng);

}  // namespace hcircle
