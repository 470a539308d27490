#pragma once

// Small builders and random generators shared by the unit tests.

#include <random>
#include <string>
#include <vector>

#include "hcircle/factor.hpp"
#include "hcircle/numfield.hpp"
#include "hcircle/ratfunc.hpp"

namespace hcircle::testing {

using QPoly = UniPoly<Rational>;

inline QPoly qpoly(std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v, Rational(0));
}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Element from rational flat coordinates (ascending powers of the generator).
inline NFElement el(const FieldRef& f, std::vector<Rational> c) {
  c.resize(static_cast<std::size_t>(absolute_degree(f)));
  return NFElement(f, std::move(c));
}

inline NFElement el(const FieldRef& f, const std::vector<long>& c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return el(f, std::move(v));
}

inline NFElement el(const FieldRef& f, std::initializer_list<long> c) { return el(f, std::vector<long>(c)); }

/// Polynomial in t whose coefficients are given as flat coordinate vectors.
inline NFPoly poly(const FieldRef& f, const std::vector<std::vector<long>>& cs) {
  std::vector<NFElement> v;
  for (const auto& c : cs) v.push_back(el(f, c));
  return NFPoly(v, field_zero(f));
}

inline FieldRef field(std::vector<long> minpoly, const std::string& name = "a") {
  return make_number_field(qpoly(std::move(minpoly)), name);
}

/// Deterministic source of random test data.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 20) {
    long den = integer(1, bound);
    return q(integer(-bound, bound), den);
  }

  QPoly qpoly(int degree, long bound = 9) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(integer(-bound, bound));
    while (sgn(c.back()) == 0) c.back() = integer(-bound, bound);
    return QPoly(c, Rational(0));
  }

  NFElement element(const FieldRef& f, long bound = 5) {
    std::vector<Rational> c;
    for (int i = 0; i < absolute_degree(f); ++i) c.push_back(rational(bound));
    return NFElement(f, c);
  }

  NFElement nonzero_element(const FieldRef& f, long bound = 5) {
    for (;;) {
      NFElement x = element(f, bound);
      if (!x.is_zero()) return x;
    }
  }

  NFPoly nfpoly(const FieldRef& f, int degree, long bound = 5) {
    std::vector<NFElement> c;
    for (int i = 0; i <= degree; ++i) c.push_back(element(f, bound));
    c.back() = nonzero_element(f, bound);
    return NFPoly(c, field_zero(f));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// The worked quartic case: K = Q, M = x^4 - 2 and a plane cubic.
struct QuarticCase {
  FieldRef field;
  Parametrization psi;

  QuarticCase() {
    field = make_number_field(qpoly({-2, 0, 0, 0, 1}), "a");
    NFPoly d = poly(field, {{1, 4, 2, 1}, {6, 3, 12, 6}, {12, 6, 3, 12}, {7}});
    NFPoly x = poly(field, {{0}, {1, 4, 2, 1}, {7, 14, 14, 7}, {11, 9, 15, 11}});
    NFPoly y = poly(field, {{1, 4, 2, 1}, {9, 15, 18, 9}, {25, 16, 29, 25}, {22, 11, 9, 15}});
    psi = Parametrization(field, {RatFunc(x, d), RatFunc(y, d)});
  }
};

/// The unit circle over Q(i): ((t^2+1)/(2t), (-i t^2 + i)/(2t)).
struct CircleCase {
  FieldRef field;
  Parametrization psi;

  CircleCase() {
    field = make_number_field(qpoly({1, 0, 1}), "i");
    NFPoly den = poly(field, {{0}, {2}});
    psi = Parametrization(field, {RatFunc(poly(field, {{1}, {0}, {1}}), den),
                                  RatFunc(poly(field, {{0, 1}, {0}, {0, -1}}), den)});
  }
};

}  // namespace hcircle::testing
