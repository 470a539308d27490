#include "hcircle/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "hcircle/error.hpp"
#include "hcircle/hypercircle.hpp"

namespace hcircle {

BenchRecord run_one(int degree, const FieldSpec& field, std::uint64_t seed, InstanceKind kind) {
  BenchRecord rec;
  rec.degree = degree;
  rec.n = field.minpoly.degree();
  rec.seed = seed;
  try {
    GenOptions opts;
    opts.kind = kind;
    opts.degree = degree;
    opts.field = field;
    opts.seed = seed;
    const Instance inst = gen_instance(opts).instance;
    const auto t0 = std::chrono::steady_clock::now();
    const HypercircleResult r = standard_parametrization(inst.psi);
    const auto t1 = std::chrono::steady_clock::now();
    rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.verdict = r.defined ? "DefinedOverK" : "NotDefinedOverK";
    rec.params_tried = r.max_params_tried();
  } catch (const std::exception& e) {
    rec.verdict = "error";
    rec.error = e.what();
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  struct Job {
    int degree;
    const FieldSpec* field;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int d : config.degrees)
    for (const auto& f : config.fields)
      for (int s = 1; s <= config.seeds; ++s) jobs.push_back({d, &f, static_cast<std::uint64_t>(s)});

  std::vector<BenchRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      out[i] = run_one(jobs[i].degree, *jobs[i].field, jobs[i].seed, config.kind);
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchHeader << "\n";
  char ms[32];
  for (const auto& r : records) {
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    out << r.degree << "," << r.n << "," << r.seed << "," << r.verdict << "," << r.params_tried << "," << ms << "\n";
  }
}

}  // namespace hcircle
