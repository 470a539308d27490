#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hcircle/instance.hpp"

namespace hcircle {

struct BenchRecord {
  int degree = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::string verdict;  // DefinedOverK, NotDefinedOverK or error
  int params_tried = 0;
  double ms = 0;
  std::string error;  // set when verdict == "error"
};

struct BenchConfig {
  std::vector<int> degrees;
  std::vector<FieldSpec> fields;
  int seeds = 1;  // seeds 1..seeds
  InstanceKind kind = InstanceKind::Defined;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One record per (degree, field, seed), in that nesting order. Failures are
/// recorded as rows with verdict "error"; the run continues.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Generates, runs the pipeline and times it for a single instance.
BenchRecord run_one(int degree, const FieldSpec& field, std::uint64_t seed, InstanceKind kind);

inline constexpr const char* kBenchHeader = "degree,n,seed,verdict,params_tried,ms";

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace hcircle
