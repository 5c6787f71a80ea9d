#include <benchmark/benchmark.h>

#include <random>

#include "minkpot/catalog.hpp"
#include "minkpot/verify.hpp"

using namespace minkpot;

static void BM_VerifyAll(benchmark::State& state) {
  VerifyOptions o;
  o.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(o));
}
BENCHMARK(BM_VerifyAll)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_VerifyClass(benchmark::State& state, const char* id) {
  const auto& e = find_class(id);
  for (auto _ : state) benchmark::DoNotOptimize(verify_class(e, VerifyOptions{}));
}
BENCHMARK_CAPTURE(BM_VerifyClass, P3_20, "P3.20")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyClass, C4_16, "C4.16")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyClass, C3_19, "C3.19")->Unit(benchmark::kMillisecond);

static void BM_Detect(benchmark::State& state) {
  const auto& e = find_class("P3.20");
  std::mt19937_64 rng(42);
  const ParamMap p = draw_params(e, rng, 1);
  const auto a = instantiate_potential(e, p, default_slots(e, p, rng, SlotFamily::Polynomial));
  const auto pts = sample_domain(e, p, kDetectionPoints, 7);
  for (auto _ : state) benchmark::DoNotOptimize(detect_symmetry_algebra(a, pts));
}
BENCHMARK(BM_Detect)->Unit(benchmark::kMicrosecond);

static void BM_LieDerivative(benchmark::State& state) {
  const auto& e = find_class("P4.13");
  std::mt19937_64 rng(42);
  const ParamMap p = draw_params(e, rng, 1);
  const auto a = instantiate_potential(e, p, default_slots(e, p, rng, SlotFamily::Polynomial));
  const auto gens = generators_of(e, p);
  const auto pts = sample_domain(e, p, 100, 9);
  for (auto _ : state) benchmark::DoNotOptimize(invariance_residual(a, gens, pts));
}
BENCHMARK(BM_LieDerivative)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
