#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "hcircle/bench.hpp"
#include "hcircle/error.hpp"
#include "hcircle/hypercircle.hpp"
#include "hcircle/instance.hpp"
#include "support.hpp"

using namespace hcircle;
using namespace hcircle::testing;

namespace {

const char* kCircle = R"({
  "field": {"generator": "i", "minpoly": ["1", "0", "1"]},
  "parametrization": [
    {"num": [["1", "0"], ["0", "0"], ["1", "0"]], "den": [["0", "0"], ["2", "0"]]},
    {"num": [["0", "1"], ["0", "0"], ["0", "-1"]], "den": [["0", "0"], ["2", "0"]]}
  ]
})";

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

FieldSpec spec(std::vector<long> minpoly, const std::string& name = "a") {
  FieldSpec s;
  s.generator = name;
  s.minpoly = qpoly(std::move(minpoly));
  return s;
}

}  // namespace

TEST(InstanceIO, ParsesCircle) {
  Instance inst = parse_instance(kCircle);
  EXPECT_EQ(inst.generator, "i");
  EXPECT_EQ(inst.extension_degree(), 2);
  CircleCase c;
  // Separately built fields are distinct objects, so compare printed forms.
  EXPECT_EQ(to_string(inst.psi[0]), to_string(c.psi[0]));
  EXPECT_EQ(to_string(inst.psi[1]), to_string(c.psi[1]));
}

TEST(InstanceIO, RoundTrip) {
  Instance inst = parse_instance(kCircle);
  std::string text = serialize_instance(inst);
  EXPECT_EQ(text.back(), '\n');
  Instance again = parse_instance(text);
  EXPECT_EQ(serialize_instance(again), text);
  EXPECT_EQ(to_string(again.psi[0]), to_string(inst.psi[0]));
  EXPECT_EQ(to_string(again.psi[1]), to_string(inst.psi[1]));
}

TEST(InstanceIO, RoundTripGeneratedProperty) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenOptions o;
    o.degree = 3;
    o.ext_degree = 3;
    o.seed = seed;
    Instance inst = gen_instance(o).instance;
    Instance again = parse_instance(serialize_instance(inst));
    EXPECT_EQ(serialize_instance(again), serialize_instance(inst));
  }
}

TEST(InstanceIO, SyntaxErrorHasPosition) {
  std::string err = error_of("{\n  \"field\": {\n    \"generator\": \"i\",\n    \"minpoly\": [\"1\", \"0\" \"1\"]\n  }\n}\n");
  EXPECT_NE(err.find("line 4"), std::string::npos) << err;
  EXPECT_NE(err.find("column"), std::string::npos) << err;
}

TEST(InstanceIO, SemanticErrors) {
  EXPECT_NE(error_of(R"({"field": {"generator": "a", "minpoly": ["-1", "0", "1"]},
      "parametrization": [{"num": [["1", "0"]], "den": [["1", "0"]]}]})")
                .find("reducible minimal polynomial"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": {"generator": "i", "minpoly": ["1", "0", "1"]},
      "parametrization": [{"num": [["1", "0", "0"]], "den": [["1", "0"]]}]})")
                .find("length 3, expected 2"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": {"generator": "i", "minpoly": ["1", "0", "1"]},
      "parametrization": [{"num": [["1", "0"]], "den": [["0", "0"]]}]})")
                .find("zero denominator"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": {"generator": "i", "minpoly": ["1", "0", "1"]},
      "parametrization": [{"num": [["1/0", "0"]], "den": [["1", "0"]]}]})")
                .find("parametrization[0].num[0][0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": {"generator": "i", "minpoly": ["1", "0", "1"]}})").find("missing field 'parametrization'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": {"generator": "i", "minpoly": [1, 0, 1]},
      "parametrization": [{"num": [["1", "0"]], "den": [["1", "0"]]}]})")
                .find("rationals must be strings"),
            std::string::npos);
}

TEST(InstanceIO, FieldSpecForms) {
  FieldSpec a = parse_field_spec(R"({"generator": "i", "minpoly": ["1", "0", "1"]})");
  FieldSpec b = parse_field_spec(kCircle);
  EXPECT_EQ(a.minpoly, b.minpoly);
  EXPECT_EQ(a.generator, "i");
  EXPECT_THROW(parse_field_spec(R"({"generator": "a", "minpoly": ["-4", "0", "1"]})"), InputError);
}

TEST(InstanceKinds, ParseAndPrint) {
  for (auto k : {InstanceKind::Defined, InstanceKind::Twisted, InstanceKind::Adversarial})
    EXPECT_EQ(parse_instance_kind(to_string(k)), k);
  EXPECT_THROW(parse_instance_kind("weird"), InputError);
}

TEST(Generator, Deterministic) {
  GenOptions o;
  o.degree = 4;
  o.ext_degree = 3;
  o.seed = 99;
  EXPECT_EQ(serialize_instance(gen_instance(o).instance), serialize_instance(gen_instance(o).instance));
  GenOptions p = o;
  p.seed = 100;
  EXPECT_NE(serialize_instance(gen_instance(o).instance), serialize_instance(gen_instance(p).instance));
}

TEST(Generator, RandomMinpolyIsIrreducible) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    auto m = random_minpoly(n, rng);
    EXPECT_EQ(m.degree(), n);
    EXPECT_TRUE(is_irreducible(m));
  }
}

TEST(Generator, DefinedInstancesAreDefined) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenOptions o;
    o.degree = static_cast<int>(2 + seed % 4);
    o.ext_degree = static_cast<int>(2 + seed % 2);
    o.seed = seed;
    Instance inst = gen_instance(o).instance;
    EXPECT_EQ(inst.psi.degree(), o.degree);
    EXPECT_TRUE(standard_parametrization(inst.psi, inst.minpoly).defined) << seed;
  }
}

TEST(Generator, TwistedInstancesAreNotDefined) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GenOptions o;
    o.kind = InstanceKind::Twisted;
    o.degree = 3;
    o.field = spec({1, 0, 1}, "i");
    o.seed = seed;
    Instance inst = gen_instance(o).instance;
    EXPECT_FALSE(standard_parametrization(inst.psi, inst.minpoly).defined) << seed;
  }
}

TEST(Generator, AdversarialCyclotomic) {
  GenOptions o;
  o.kind = InstanceKind::Adversarial;
  o.degree = 4;
  o.field = spec({1, 1, 1, 1, 1});
  GeneratedInstance g = gen_instance(o);
  ASSERT_EQ(g.relations.size(), 3u);
  const std::vector<Rational> coeff{-6, 11, -6};
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(g.relations[k].index, static_cast<int>(k));
    ASSERT_EQ(g.relations[k].free, std::vector<int>{3});
    EXPECT_EQ(g.relations[k].coeffs[0], coeff[k]);
  }
  // Each of the points t = 1, 2, 3 maps to a distinct conjugate other than a.
  const Instance& inst = g.instance;
  const FieldRef& f = inst.field;
  std::set<std::string> seen;
  for (long t = 1; t <= 3; ++t) {
    for (const auto& c : inst.psi.components()) {
      NFElement v = *rf_eval(c, el(f, {t}));
      EXPECT_TRUE(lift_poly(inst.minpoly, f)(v).is_zero());
      EXPECT_FALSE(v == f->generator());
      if (&c == &inst.psi.components().front()) seen.insert(to_string(v));
    }
  }
  EXPECT_EQ(seen.size(), 3u);
  EXPECT_NE(to_string(g.relations[0]).find("a0 = -6*a3 + ("), std::string::npos) << to_string(g.relations[0]);
}

TEST(Generator, AdversarialPreconditions) {
  GenOptions o;
  o.kind = InstanceKind::Adversarial;
  o.degree = 3;
  o.field = spec({1, 1, 1, 1, 1});
  EXPECT_THROW(gen_instance(o), InputError);
  o.degree = 4;
  o.field = spec({-2, 0, 0, 1});  // not normal
  EXPECT_THROW(gen_instance(o), InputError);
}

TEST(Generator, RejectsBadOptions) {
  GenOptions o;
  o.degree = 1;
  EXPECT_THROW(gen_instance(o), InputError);
  o.degree = 3;
  o.ext_degree = 1;
  EXPECT_THROW(gen_instance(o), InputError);
}

TEST(Bench, CsvShape) {
  BenchConfig cfg;
  cfg.degrees = {2, 3};
  cfg.fields = {spec({1, 0, 1}, "i")};
  cfg.seeds = 2;
  cfg.threads = 2;
  auto recs = run_bench(cfg);
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].degree, 2);
  EXPECT_EQ(recs[0].seed, 1u);
  EXPECT_EQ(recs[1].seed, 2u);
  EXPECT_EQ(recs[2].degree, 3);
  for (const auto& r : recs) {
    EXPECT_EQ(r.verdict, "DefinedOverK");
    EXPECT_EQ(r.n, 2);
    EXPECT_GT(r.params_tried, 0);
  }
  std::ostringstream os;
  write_csv(os, recs);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "degree,n,seed,verdict,params_tried,ms");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
  }
  EXPECT_EQ(rows, 4);
}

TEST(Bench, DeterministicAcrossThreadCounts) {
  BenchConfig cfg;
  cfg.degrees = {2, 4};
  cfg.fields = {spec({-2, 0, 0, 1})};
  cfg.seeds = 3;
  cfg.threads = 1;
  auto a = run_bench(cfg);
  cfg.threads = 4;
  auto b = run_bench(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].degree, b[i].degree);
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].verdict, b[i].verdict);
    EXPECT_EQ(a[i].params_tried, b[i].params_tried);
  }
}

TEST(Bench, TwistedRowsAreNegative) {
  BenchRecord r = run_one(3, spec({1, 0, 1}, "i"), 5, InstanceKind::Twisted);
  EXPECT_EQ(r.verdict, "NotDefinedOverK");
}
