// Micro-benchmarks for the hot paths: concept enumeration, the quasi-feature
// scan, base construction and the logic closure.

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>

#include "triadic/augmentation.hpp"
#include "triadic/bases.hpp"
#include "triadic/concepts.hpp"
#include "triadic/context.hpp"
#include "triadic/logic.hpp"

namespace {

using namespace triadic;

const TriadicContext& reference_context() {
  static TriadicContext ctx = [] {
    std::ifstream in(std::string(BENCH_DATA_DIR) + "/running.triples");
    return TriadicContext::parse_auto(in);
  }();
  return ctx;
}

TriadicContext random_context(int ng, int nm, int nc, unsigned seed) {
  auto mk = [](const char* prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Universe(names);
  };
  TriadicContext ctx(mk("g", ng), mk("m", nm), mk("c", nc));
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.4);
  for (int g = 0; g < ng; ++g)
    for (int m = 0; m < nm; ++m)
      for (int c = 0; c < nc; ++c)
        if (coin(rng)) ctx.add_triple_indices(g, m, c);
  return ctx;
}

void BM_enumerate_concepts_reference(benchmark::State& state) {
  const auto& ctx = reference_context();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_concepts(ctx).concepts.size());
}
BENCHMARK(BM_enumerate_concepts_reference);

void BM_enumerate_concepts_random(benchmark::State& state) {
  auto ctx = random_context(static_cast<int>(state.range(0)), 6, 6, 99);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_concepts(ctx).concepts.size());
}
BENCHMARK(BM_enumerate_concepts_random)->Arg(8)->Arg(16)->Arg(32);

void BM_unit_quasi_feature_scan(benchmark::State& state) {
  const auto& ctx = reference_context();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        relevant_quasi_features(ctx, Axis::M, true).size());
}
BENCHMARK(BM_unit_quasi_feature_scan);

void BM_full_quasi_feature_scan(benchmark::State& state) {
  const auto& ctx = reference_context();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        relevant_quasi_features(ctx, Axis::M, false).size());
}
BENCHMARK(BM_full_quasi_feature_scan);

void BM_optimal_cai_base(benchmark::State& state) {
  const auto& ctx = reference_context();
  for (auto _ : state)
    benchmark::DoNotOptimize(cai_base(ctx, Kind::CAI, true).size());
}
BENCHMARK(BM_optimal_cai_base);

void BM_logic_closure(benchmark::State& state) {
  const auto& ctx = reference_context();
  auto sigma = complete_base(ctx, Kind::BCAI);
  Mask fullA = ctx.attributes().full();
  Mask fullC = ctx.conditions().full();
  for (auto _ : state) {
    Mask acc = 0;
    for (Mask A = 0;; A = (A - fullA) & fullA) {
      for (Mask C = 0;; C = (C - fullC) & fullC) {
        acc ^= closure(ctx, sigma, A, C);
        if (C == fullC) break;
      }
      if (A == fullA) break;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_logic_closure);

}  // namespace

BENCHMARK_MAIN();
