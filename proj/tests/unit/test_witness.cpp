#include <gtest/gtest.h>

#include "hcircle/error.hpp"
#include "hcircle/hypercircle.hpp"
#include "hcircle/witness.hpp"
#include "support.hpp"

using namespace hcircle;
using namespace hcircle::testing;

TEST(MPoly, Arithmetic) {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly s = x + y;
  MPoly p = s * s;
  EXPECT_EQ(p.term_count(), 3u);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p - x * x - y * y, x * y * Rational(2));
}

TEST(Weil, CircleSystem) {
  CircleCase c;
  WeilSystem w = weil_substitution(c.psi, qpoly({1, 0, 1}));
  EXPECT_EQ(w.n, 2u);
  MPoly t0 = MPoly::variable(2, 0), t1 = MPoly::variable(2, 1);
  EXPECT_EQ(w.denominator, t0 * t0 + t1 * t1);
  EXPECT_EQ(w.F_polys().size(), 2u);
}

TEST(Weil, CircleWitness) {
  CircleCase c;
  WeilSystem w = weil_substitution(c.psi, qpoly({1, 0, 1}));
  EXPECT_TRUE(check_on_witness(w, c.psi));
  EXPECT_TRUE(denominator_nonvanishing(w, c.psi));
  HypercircleResult r = standard_parametrization(c.psi);
  EXPECT_TRUE(check_on_witness(w, r.phi));
  const FieldRef& f = c.field;
  Parametrization bad(f, {RatFunc(poly(f, {{0}, {1}})), RatFunc(poly(f, {{1}}))});
  EXPECT_FALSE(check_on_witness(w, bad));
}

TEST(Weil, SubstitutionIdentity) {
  // A bare variable substitutes to the numerator of its component.
  CircleCase c;
  WeilSystem w = weil_substitution(c.psi, qpoly({1, 0, 1}));
  MPoly t0 = MPoly::variable(2, 0);
  const FieldRef& f = c.field;
  Parametrization phi(f, {RatFunc(poly(f, {{0}, {1}})), RatFunc(poly(f, {{1}}))});
  EXPECT_EQ(substitute(t0, phi), poly(f, {{0}, {1}}));
}

TEST(Weil, BudgetGuards) {
  QuarticCase q4;
  EXPECT_THROW(weil_substitution(q4.psi, qpoly({-2, 0, 0, 0, 1})), InputError);
  FieldRef f = field({1, 0, 1}, "i");
  NFPoly t7 = NFPoly::monomial(field_one(f), 7);
  Parametrization big(f, {RatFunc(t7), RatFunc(x_poly(f))});
  EXPECT_THROW(weil_substitution(big, qpoly({1, 0, 1})), InputError);
}

TEST(Weil, CubicFieldGeneratedDefinedInstance) {
  FieldRef f = field({-2, 0, 0, 1});
  NFPoly den = poly(f, {{1}, {0}, {1}});
  MoebiusTransform u{el(f, {1, 1}), el(f, {0, 0, 1}), el(f, {1}), el(f, {2})};
  Parametrization psi(f, {rf_compose_moebius(RatFunc(poly(f, {{1}, {0}, {-1}}), den), u),
                          rf_compose_moebius(RatFunc(poly(f, {{0}, {2}}), den), u)});
  HypercircleResult r = standard_parametrization(psi);
  ASSERT_TRUE(r.defined);
  WeilSystem w = weil_substitution(psi, qpoly({-2, 0, 0, 1}));
  EXPECT_TRUE(check_on_witness(w, r.phi));
  EXPECT_TRUE(denominator_nonvanishing(w, r.phi));
  // Perturbing one component breaks the system.
  std::vector<RatFunc> comps = r.phi.components();
  comps[0] = comps[0] + RatFunc(NFPoly::constant(field_one(f)));
  EXPECT_FALSE(check_on_witness(w, Parametrization(f, comps)));
}
