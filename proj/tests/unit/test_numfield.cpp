#include <gtest/gtest.h>

#include "hcircle/error.hpp"
#include "hcircle/factor.hpp"
#include "support.hpp"

using namespace hcircle;
using namespace hcircle::testing;

namespace {

// Plain Euclidean gcd, the oracle for the multi-modular one.
NFPoly euclid_gcd(NFPoly a, NFPoly b) {
  while (!b.is_zero()) {
    NFPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<FieldRef> sample_fields() {
  FieldRef gi = field({1, 0, 1}, "i");
  FieldRef tower = make_relative_field(gi, poly(gi, {{-2}, {0}, {1}}), "r");
  return {field({-2, 0, 1}), field({-2, 0, 0, 1}), field({-2, 0, 0, 0, 1}), field({1, 1, 1, 1, 1}),
          field({3, -1, 0, 2, 0, 1}), tower};
}

}  // namespace

TEST(NumberField, FieldAxiomsProperty) {
  Gen g(21);
  for (const FieldRef& f : sample_fields()) {
    for (int i = 0; i < 20; ++i) {
      NFElement x = g.element(f), y = g.element(f), z = g.element(f);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x - x, field_zero(f));
      EXPECT_EQ(x * field_one(f), x);
    }
  }
}

TEST(NumberField, InverseProperty) {
  Gen g(22);
  for (const FieldRef& f : sample_fields()) {
    for (int i = 0; i < 15; ++i) {
      NFElement x = g.nonzero_element(f, 30);
      EXPECT_TRUE((x * x.inverse()).is_one()) << to_string(x);
      NFElement y = g.element(f);
      EXPECT_EQ((y / x) * x, y);
    }
  }
}

TEST(NumberField, DivisionByZeroThrows) {
  FieldRef f = field({-2, 0, 0, 1});
  EXPECT_THROW(field_zero(f).inverse(), ArithmeticError);
  EXPECT_THROW(field_one(f) / field_zero(f), ArithmeticError);
}

TEST(NumberField, GeneratorSatisfiesMinpoly) {
  for (const FieldRef& f : sample_fields()) {
    NFElement a = f->generator();
    NFElement acc = field_zero(f);
    for (int i = f->degree(); i >= 0; --i) acc = acc * a + f->minpoly()[i].embed_into(f);
    EXPECT_TRUE(acc.is_zero());
  }
}

TEST(NumberField, QuarticReduction) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  NFElement a = f->generator();
  EXPECT_EQ(a * a * a * a, el(f, {2}));
  EXPECT_EQ(a * a * a * a * a, el(f, {0, 2}));
  EXPECT_EQ(el(f, {0, 1}).inverse(), el(f, std::vector<Rational>{0, 0, 0, q(1, 2)}));
}

TEST(NumberField, TraceAndNormAgreeWithCharpoly) {
  Gen g(23);
  for (const FieldRef& f : sample_fields()) {
    for (int i = 0; i < 10; ++i) {
      NFElement x = g.element(f);
      NFPoly cp = charpoly(x);
      const int n = f->degree();
      ASSERT_EQ(cp.degree(), n);
      EXPECT_EQ(trace(x), -cp[n - 1]);
      NFElement nm = n % 2 == 0 ? cp[0] : -cp[0];
      EXPECT_EQ(norm(x), nm);
      // Cayley-Hamilton.
      NFElement acc = field_zero(f);
      for (int k = n; k >= 0; --k) acc = acc * x + cp[k].embed_into(f);
      EXPECT_TRUE(acc.is_zero());
    }
  }
}

TEST(NumberField, TraceOfPowersIsNewtonSum) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  NFElement a = f->generator();
  NFElement p = field_one(f);
  std::vector<Rational> expect{4, 0, 0, 0};
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(trace(p), NFElement(expect[static_cast<std::size_t>(k)]));
    p = p * a;
  }
  EXPECT_EQ(norm(a), NFElement(-2L));
}

TEST(NumberField, NormIsMultiplicative) {
  Gen g(24);
  for (const FieldRef& f : sample_fields()) {
    NFElement x = g.element(f), y = g.element(f);
    EXPECT_EQ(norm(x * y), norm(x) * norm(y));
  }
}

TEST(NumberField, TowerEmbedding) {
  FieldRef gi = field({1, 0, 1}, "i");
  FieldRef e = make_relative_field(gi, poly(gi, {{-2}, {0}, {1}}), "r");
  EXPECT_EQ(e->absolute_degree(), 4);
  EXPECT_EQ(e->degree(), 2);
  EXPECT_TRUE(is_subfield(gi, e));
  NFElement i = gi->generator();
  NFElement r = e->generator();
  EXPECT_EQ(i * i, el(gi, {-1}));
  EXPECT_EQ(r * r, el(e, {2}));
  NFElement mixed = r + i;  // promotes to e
  EXPECT_EQ(mixed.field(), e);
  EXPECT_TRUE(i.embed_into(e).in_base());
  EXPECT_FALSE(r.in_base());
  EXPECT_EQ(i.embed_into(e).restrict_to(gi), i);
  EXPECT_EQ(trace(r * i), field_zero(gi));
  EXPECT_EQ(norm(r + i), el(gi, {-3}));
}

TEST(NumberField, ConjugateFlipsSign) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  NFElement a = f->generator();
  ConjugacyClass cls = make_conjugacy_class(NFPoly({a, field_one(f)}, field_zero(f)), "b");
  NFElement x = el(f, {11, 9, 15, 11});
  NFElement img = conjugate(x, cls);
  EXPECT_EQ(img.restrict_to(f), el(f, {11, -9, 15, -11}));
}

TEST(NumberField, ConjugateIntoQuadraticClass) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  NFElement a = f->generator();
  ConjugacyClass cls = make_conjugacy_class(NFPoly({a * a, field_zero(f), field_one(f)}, field_zero(f)), "b");
  EXPECT_EQ(cls.class_size, 2);
  NFElement b = cls.root();
  EXPECT_EQ(b * b, -(a * a).embed_into(cls.relative_field));
  EXPECT_EQ(conjugate(a * a, cls), -(a * a).embed_into(cls.relative_field));
  // Conjugation is a ring homomorphism.
  Gen g(25);
  for (int i = 0; i < 10; ++i) {
    NFElement x = g.element(f), y = g.element(f);
    EXPECT_EQ(conjugate(x * y, cls), conjugate(x, cls) * conjugate(y, cls));
    EXPECT_EQ(conjugate(x + y, cls), conjugate(x, cls) + conjugate(y, cls));
  }
}

TEST(NumberField, ModularGcdMatchesEuclid) {
  Gen g(26);
  for (const FieldRef& f : sample_fields()) {
    for (int i = 0; i < 6; ++i) {
      NFPoly c = g.nfpoly(f, static_cast<int>(g.integer(0, 2)));
      NFPoly a = g.nfpoly(f, static_cast<int>(g.integer(0, 3))) * c;
      NFPoly b = g.nfpoly(f, static_cast<int>(g.integer(0, 3))) * c;
      NFPoly h = gcd(a, b);
      EXPECT_EQ(h, euclid_gcd(a, b));
      EXPECT_TRUE(divides(c, h));
    }
  }
}

TEST(NumberField, GcdEdgeCases) {
  FieldRef f = field({-2, 0, 0, 1});
  NFPoly x = x_poly(f);
  NFPoly zero = zero_poly(f);
  EXPECT_EQ(gcd(x * el(f, {0, 3}), zero), x);
  EXPECT_EQ(gcd(zero, (x + NFPoly::constant(el(f, {1})))), (x + NFPoly::constant(el(f, {1}))));
  EXPECT_EQ(gcd(x, (x + NFPoly::constant(el(f, {1})))).degree(), 0);
}

TEST(NumberField, SubstituteGeneratorIsHomomorphism) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  NFElement a = f->generator();
  Gen g(27);
  for (int i = 0; i < 10; ++i) {
    NFElement x = g.element(f), y = g.element(f);
    EXPECT_EQ(substitute_generator(x * y, f, -a), substitute_generator(x, f, -a) * substitute_generator(y, f, -a));
  }
}

TEST(NumberField, Printing) {
  FieldRef f = field({-2, 0, 0, 0, 1});
  EXPECT_EQ(to_string(field_zero(f)), "0");
  EXPECT_EQ(to_string(el(f, {3})), "3");
  EXPECT_NE(to_string(f->generator()).find('a'), std::string::npos);
}
