#include <benchmark/benchmark.h>

#include "nilcontact/catalog.hpp"

using namespace nilcontact;

static void BM_JacobiFull(benchmark::State& state) {
  const std::vector<std::string> names{"x3", "xyz", "det-sym-3", "det3", "pfaff6", "j3o-norm"};
  const SymCubic t = find_catalog_entry(names[static_cast<std::size_t>(state.range(0))]).build();
  for (auto _ : state) benchmark::DoNotOptimize(verify_jacobi(t));
  state.SetLabel("p=" + std::to_string(t.dim()));
}
BENCHMARK(BM_JacobiFull)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_GroupMul(benchmark::State& state) {
  const SymCubic t = cubic_j3o();
  Rng rng(1);
  const GroupElem a{n_from_coordinates(27, rng.vec(n_dim(27)))}, b{n_from_coordinates(27, rng.vec(n_dim(27)))};
  for (auto _ : state) benchmark::DoNotOptimize(group_mul(a, b, t));
}
BENCHMARK(BM_GroupMul)->Unit(benchmark::kMicrosecond);

// 22 x 22 for p = 9
static void BM_DThetaDeterminant(benchmark::State& state) {
  const std::size_t p = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const ChartPoint pt = random_chart_point(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(dtheta_matrix(pt).determinant());
  state.SetLabel(std::to_string(2 * p + 4) + "x" + std::to_string(2 * p + 4));
}
BENCHMARK(BM_DThetaDeterminant)->Arg(3)->Arg(9)->Arg(27)->Unit(benchmark::kMillisecond);

static void BM_LineSolve(benchmark::State& state) {
  const NilpotentAlgebra alg(cubic_det3());
  Rng rng(3);
  const Vec v = rng.vec(9);
  for (auto _ : state) benchmark::DoNotOptimize(solve_line_coordinates(v, alg));
}
BENCHMARK(BM_LineSolve)->Unit(benchmark::kMillisecond);

static void BM_ChevalleyE8(benchmark::State& state) {
  const RootSystem rs = RootSystem::parse("E8");
  for (auto _ : state) benchmark::DoNotOptimize(ChevalleyAlgebra(rs).dim());
}
BENCHMARK(BM_ChevalleyE8)->Unit(benchmark::kMillisecond);

static void BM_ExtractAndEmbedE8(benchmark::State& state) {
  const ChevalleyAlgebra alg(RootSystem::parse("E8"));
  for (auto _ : state) {
    const Extraction ex = extract_cubic(alg);
    benchmark::DoNotOptimize(verify_embedding(alg, ex).pass);
  }
}
BENCHMARK(BM_ExtractAndEmbedE8)->Unit(benchmark::kMillisecond);

static void BM_ProbeExhaustiveFermat(benchmark::State& state) {
  ProbeConfig cfg;
  cfg.primes = {static_cast<std::uint64_t>(state.range(0))};
  const SymCubic t = cubic_fermat(3);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness_probe(t, cfg).found());
}
BENCHMARK(BM_ProbeExhaustiveFermat)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_ProbeRandomJ3o(benchmark::State& state) {
  ProbeConfig cfg;
  cfg.primes = {5};
  cfg.budget = 100'000;
  cfg.threads = static_cast<unsigned>(state.range(0));
  const SymCubic t = cubic_j3o();
  for (auto _ : state) benchmark::DoNotOptimize(smoothness_probe(t, cfg).found());
}
BENCHMARK(BM_ProbeRandomJ3o)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
