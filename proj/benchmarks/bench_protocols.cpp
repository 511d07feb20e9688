#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mpcstats/engine.hpp"
#include "mpcstats/protocols.hpp"
#include "mpcstats/shamir.hpp"
#include "mpcstats/stats.hpp"

namespace {

using namespace mpcstats;

std::vector<Integer> random_values(std::size_t n, long lo, long hi, std::uint64_t seed) {
  Prng rng = make_prng(seed, 0);
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(dist(rng));
  return out;
}

void BM_ShareReconstruct(benchmark::State& state) {
  SharingConfig cfg;
  cfg.parties = static_cast<int>(state.range(0));
  cfg.threshold = (cfg.parties - 1) / 2;
  Prng rng = make_prng(1, 0);
  const FieldElement secret(cfg.field, Integer(123456789));
  for (auto _ : state) {
    auto shares = share(secret, cfg, rng);
    benchmark::DoNotOptimize(reconstruct(shares));
  }
}
BENCHMARK(BM_ShareReconstruct)->Arg(3)->Arg(5)->Arg(7);

void BM_MultiplicationBatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PartyNetwork net(EngineConfig{});
  const auto values = random_values(n, -1000, 1000, 2);
  const auto a = net.distribute_input(0, values, 16);
  const auto b = net.distribute_input(1, values, 16);
  for (auto _ : state) benchmark::DoNotOptimize(mul_secret_batch(net, a, b));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_MultiplicationBatch)->RangeMultiplier(4)->Range(16, 4096);

void BM_TreeSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PartyNetwork net(EngineConfig{});
  const auto ints = net.distribute_input(0, random_values(n, 0, 1000, 3), 16);
  const auto fixed = int_to_fixed_batch(net, ints);
  for (auto _ : state) benchmark::DoNotOptimize(tree_sum_fixed(net, fixed));
}
BENCHMARK(BM_TreeSum)->RangeMultiplier(4)->Range(4, 1024);

void BM_SqrtNewton(benchmark::State& state) {
  PartyNetwork net(EngineConfig{});
  const std::vector<Integer> v{Integer(83333)};
  const auto a = net.distribute_input(0, v).front();
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_newton(net, a, 1));
}
BENCHMARK(BM_SqrtNewton);

StdDevInput stddev_input(std::size_t n) {
  StdDevInput input;
  input.parties.resize(3);
  const auto values = random_values(n, 0, 1000, 4);
  for (std::size_t i = 0; i < n; ++i) input.parties[i % 3].push_back(values[i]);
  return input;
}

void BM_StdDev(benchmark::State& state) {
  const auto input = stddev_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    PartyNetwork net(EngineConfig{});
    benchmark::DoNotOptimize(stddev(net, input));
  }
}
BENCHMARK(BM_StdDev)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

void BM_StdDevUnoptimized(benchmark::State& state) {
  const auto input = stddev_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    PartyNetwork net(EngineConfig{});
    benchmark::DoNotOptimize(stddev_unoptimized(net, input));
  }
}
BENCHMARK(BM_StdDevUnoptimized)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

ChiSqInput chisq_input(std::size_t rows, std::size_t cols) {
  Prng rng = make_prng(5, 0);
  std::uniform_int_distribution<std::int64_t> dist(1, 100);
  ChiSqInput input;
  input.counts.assign(rows, std::vector<std::int64_t>(cols));
  for (auto& r : input.counts) {
    for (auto& c : r) c = dist(rng);
  }
  return input;
}

void BM_ChiSq(benchmark::State& state) {
  const auto input = chisq_input(static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    PartyNetwork net(EngineConfig{});
    benchmark::DoNotOptimize(chisq_optimized(net, input));
  }
}
BENCHMARK(BM_ChiSq)->ArgsProduct({{4, 8}, {8, 64}})->Unit(benchmark::kMillisecond);

void BM_ChiSqUnoptimized(benchmark::State& state) {
  const auto input = chisq_input(static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    PartyNetwork net(EngineConfig{});
    benchmark::DoNotOptimize(chisq_unoptimized(net, input));
  }
}
BENCHMARK(BM_ChiSqUnoptimized)->ArgsProduct({{4, 8}, {8, 64}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
