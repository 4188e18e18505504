// Serial reference vs OpenMP path for the parallel kernels. Arg 0 is the
// serial policy, arg 1 the parallel one.

#include <random>

#include <benchmark/benchmark.h>

#include "socle/families.hpp"
#include "socle/gb_cache.hpp"
#include "socle/invariants.hpp"
#include "socle/kernels.hpp"

using namespace socle;

namespace {

exec::Policy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? exec::Policy::Serial : exec::Policy::Parallel;
}

kernels::MatrixModP random_matrix(std::size_t n, std::uint32_t p) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  kernels::MatrixModP m(n, n, p);
  for (auto& v : m.data) v = dist(rng);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(1)), 32003);
  const auto policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank(m, policy));
  state.SetLabel(policy == exec::Policy::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_Rank)->ArgsProduct({{0, 1}, {128, 384}})->Unit(benchmark::kMillisecond);

void BM_HilbertSamuel(benchmark::State& state) {
  auto inst = noncm_ring(3, 1, Field::prime(101));
  HilbertSamuelOptions o;
  o.policy = policy_of(state);
  for (auto _ : state) {
    GbCache::global().clear_memory();
    benchmark::DoNotOptimize(hilbert_samuel(inst.ideal("Q"), 6, o));
  }
  state.SetLabel(o.policy == exec::Policy::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_HilbertSamuel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyFiber(benchmark::State& state) {
  auto inst = fiber_product_ring(2, Field::prime(101));
  VerifyConfig config;
  config.samples = 4;
  const auto previous = exec::default_policy();
  exec::set_default_policy(policy_of(state));
  for (auto _ : state) {
    GbCache::global().clear_memory();
    benchmark::DoNotOptimize(verify(inst, config));
  }
  exec::set_default_policy(previous);
  state.SetLabel(policy_of(state) == exec::Policy::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_VerifyFiber)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
