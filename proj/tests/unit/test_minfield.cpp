#include <gtest/gtest.h>

#include "hcircle/minfield.hpp"
#include "support.hpp"

using namespace hcircle;
using namespace hcircle::testing;

namespace {

Parametrization negative_case(const FieldRef& f) {
  return Parametrization(f, {RatFunc(poly(f, {{0}, {1}})), RatFunc(poly(f, {{0}, {0}, {0, 0, 1}}))});
}

// Span of the given vectors equals span of the expected ones (both over Q).
bool same_span(const std::vector<NFElement>& got, const std::vector<NFElement>& want) {
  if (got.size() != want.size()) return false;
  const std::size_t n = got.empty() ? 0 : got.front().flat().size();
  Matrix<Rational> m;
  for (const auto& v : want) m.emplace_back(v.flat().begin(), v.flat().end());
  for (const auto& v : got) {
    Matrix<Rational> aug = m;
    aug.emplace_back(v.flat().begin(), v.flat().end());
    if (rref(aug, n).size() != want.size()) return false;
  }
  return true;
}

}  // namespace

TEST(InvarianceSystem, SignFlipKillsOddCoordinates) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  NFElement a = f->generator();
  ConjugacyClass cls = make_conjugacy_class(NFPoly({a, field_one(f)}, field_zero(f)), "b");
  Matrix<Rational> sys = invariance_system(cls);
  auto ker = nullspace(sys, 4, Rational(0));
  std::vector<NFElement> got;
  for (auto& v : ker) got.push_back(NFElement(f, v));
  EXPECT_TRUE(same_span(got, {el(f, {1}), el(f, {0, 0, 1})}));
}

TEST(InvarianceSystem, QuadraticClassFixesOnlyRationals) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  NFElement a = f->generator();
  ConjugacyClass cls = make_conjugacy_class(NFPoly({a * a, field_zero(f), field_one(f)}, field_zero(f)), "b");
  auto ker = nullspace(invariance_system(cls), 4, Rational(0));
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(same_span({NFElement(f, ker[0])}, {el(f, {1})}));
}

TEST(MinimumField, NegativeFixture) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  HypercircleResult r = standard_parametrization(negative_case(f));
  ASSERT_FALSE(r.defined);
  FixedField l = minimum_field(r);
  EXPECT_EQ(l.degree(), 2);
  EXPECT_EQ(l.relative_degree, 2);
  EXPECT_TRUE(same_span(l.basis, {el(f, {1}), el(f, {0, 0, 1})}));
  EXPECT_EQ(l.primitive_minpoly, qpoly({-2, 0, 1}));
  EXPECT_TRUE(l.contains(el(f, {3, 0, -7})));
  EXPECT_FALSE(l.contains(f->generator()));
}

TEST(MinimumField, RelativeRerunIsDefined) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  Parametrization psi = negative_case(f);
  FixedField l = minimum_field(standard_parametrization(psi));
  RelativeView v = view_over_subfield(psi, l);
  EXPECT_EQ(v.extension->degree(), 2);
  EXPECT_EQ(v.extension->base(), v.subfield);
  EXPECT_EQ(absolute_degree(v.subfield), 2);
  HypercircleResult r = standard_parametrization(v.psi);
  ASSERT_TRUE(r.defined);
  EXPECT_EQ(r.phi.ambient_dim(), 2u);
  // phi_0 + a phi_1 = t over L(a).
  RatFunc sum = r.phi[0] + r.phi[1] * v.extension->generator();
  EXPECT_EQ(sum, RatFunc(x_poly(v.extension)));
}

TEST(MinimumField, DefinedCasesGiveRationals) {
  QuarticCase qc;
  FixedField l = minimum_field(standard_parametrization(qc.psi));
  EXPECT_EQ(l.degree(), 1);
  EXPECT_EQ(l.relative_degree, 4);
  CircleCase cc;
  EXPECT_EQ(minimum_field(standard_parametrization(cc.psi)).degree(), 1);
}

TEST(MinimumField, NoFixingConjugatesGivesWholeField) {
  // (t, a t^2) over Q(2^(1/3)): nothing but the identity fixes the curve.
  FieldRef f = field({-2, 0, 0, 1});
  Parametrization psi(f, {RatFunc(poly(f, {{0}, {1}})), RatFunc(poly(f, {{0}, {0}, {0, 1}}))});
  HypercircleResult r = standard_parametrization(psi);
  ASSERT_FALSE(r.defined);
  FixedField l = minimum_field(r);
  EXPECT_EQ(l.degree(), 3);
  EXPECT_EQ(l.relative_degree, 1);
  EXPECT_EQ(l.primitive_minpoly.degree(), 3);
}

TEST(MinimumField, PrimitiveGeneratesBasisProperty) {
  // Powers of the primitive element span the basis.
  FieldRef f = field({-2, 0, 0, 0, 1});
  FixedField l = minimum_field(standard_parametrization(negative_case(f)));
  std::vector<NFElement> powers{field_one(f)};
  for (int k = 1; k < l.degree(); ++k) powers.push_back(powers.back() * l.primitive);
  EXPECT_TRUE(same_span(powers, l.basis));
  NFElement acc = field_zero(f);
  for (int k = l.primitive_minpoly.degree(); k >= 0; --k) acc = acc * l.primitive + NFElement(l.primitive_minpoly[k]);
  EXPECT_TRUE(acc.is_zero());
}
