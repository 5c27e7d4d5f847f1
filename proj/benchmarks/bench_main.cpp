#include <benchmark/benchmark.h>

#include <random>

#include "coxflip/flipping.hpp"
#include "coxflip/group.hpp"
#include "coxflip/orbits.hpp"
#include "coxflip/solver.hpp"

using namespace coxflip;

namespace {
std::vector<Gf2Matrix> gens_of(Family f, int n) {
  return GeneratorSet(CoxeterGraph::build_family(f, n)).gens();
}
} // namespace

static void BM_MatVec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(n));
  for (auto& c : cols) c = rng() & low_mask(n);
  std::uint64_t v = rng() & low_mask(n);
  for (auto _ : state) {
    v = mat_vec_bits(cols, v) ^ 1u;
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_MatVec)->Arg(8)->Arg(32)->Arg(64);

static void BM_MatMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gens = gens_of(Family::A, n);
  Gf2Matrix m = Gf2Matrix::identity(n);
  std::size_t i = 0;
  for (auto _ : state) {
    m = m * gens[i++ % gens.size()];
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MatMul)->Arg(8)->Arg(64);

static void BM_EnumerateE6(benchmark::State& state) {
  auto gens = gens_of(Family::E, 6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(6, gens).size());
}
BENCHMARK(BM_EnumerateE6)->Unit(benchmark::kMillisecond);

static void BM_ChainE8(benchmark::State& state) {
  auto gens = gens_of(Family::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(StabilizerChain(8, gens).order());
}
BENCHMARK(BM_ChainE8)->Unit(benchmark::kMillisecond);

static void BM_OrbitPartitionE(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gens = gens_of(Family::E, n);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(gens, n).classes.size());
}
BENCHMARK(BM_OrbitPartitionE)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_SolveE10(benchmark::State& state) {
  auto g = CoxeterGraph::build_family(Family::E, 10);
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    Gf2Vector a(10, rng() & 1023u);
    auto b = scramble(g, a, 30, rng());
    benchmark::DoNotOptimize(solve(g, a, b).moves.size());
  }
}
BENCHMARK(BM_SolveE10)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
