#include <benchmark/benchmark.h>

#include "hcircle/factor.hpp"
#include "hcircle/hypercircle.hpp"
#include "hcircle/instance.hpp"

using namespace hcircle;

namespace {

UniPoly<Rational> x_pow_minus(int n, long c) {
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  v[0] = -c;
  v.back() = 1;
  return UniPoly<Rational>(v, Rational(0));
}

FieldSpec gaussian() { return {"i", UniPoly<Rational>({Rational(1), Rational(0), Rational(1)}, Rational(0))}; }

}  // namespace

static void BM_FactorCyclotomicProduct(benchmark::State& state) {
  const auto f = x_pow_minus(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(factor_rational(f));
}
BENCHMARK(BM_FactorCyclotomicProduct)->Arg(12)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

static void BM_FactorOverNumberField(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldRef e = make_number_field(x_pow_minus(n, 2), "a");
  const NFPoly m = lift_poly(x_pow_minus(n, 2), e);
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_nf(m, e));
}
BENCHMARK(BM_FactorOverNumberField)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_StandardParametrization(benchmark::State& state) {
  GenOptions opts;
  opts.degree = static_cast<int>(state.range(0));
  opts.field = gaussian();
  opts.seed = 7;
  const Instance inst = gen_instance(opts).instance;
  for (auto _ : state) benchmark::DoNotOptimize(standard_parametrization(inst.psi));
}
BENCHMARK(BM_StandardParametrization)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_GenerateDefined(benchmark::State& state) {
  GenOptions opts;
  opts.degree = static_cast<int>(state.range(0));
  opts.field = gaussian();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    opts.seed = seed++;
    benchmark::DoNotOptimize(gen_instance(opts));
  }
}
BENCHMARK(BM_GenerateDefined)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
