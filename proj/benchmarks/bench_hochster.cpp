#include <benchmark/benchmark.h>

#include "hochster/constructions.hpp"
#include "hochster/hochster_ring.hpp"
#include "hochster/ring_constructions.hpp"
#include "hochster/zoo.hpp"

using namespace hochster;

namespace {

SimplicialComplex polygon(int m) { return zoo("polygon(" + std::to_string(m) + ")"); }

void BM_BigradedBettiPolygon(benchmark::State& state) {
  const auto K = polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bigraded_betti(K, Coefficients::integers()));
}
BENCHMARK(BM_BigradedBettiPolygon)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

void BM_BigradedBettiIcosahedron(benchmark::State& state) {
  const auto K = zoo("I12");
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bigraded_betti(K, Coefficients::rationals(), jobs));
}
BENCHMARK(BM_BigradedBettiIcosahedron)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_RingConstruction(benchmark::State& state) {
  const auto K = polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(HochsterRing<Rationals>(K));
}
BENCHMARK(BM_RingConstruction)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  const HochsterRing<Rationals> H(state.range(0) == 0 ? zoo("O6") : zoo("I12"));
  for (auto _ : state) benchmark::DoNotOptimize(H.fingerprint());
  state.SetLabel(state.range(0) == 0 ? "O6" : "I12");
}
BENCHMARK(BM_Fingerprint)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConnectedSumFormula(benchmark::State& state) {
  const auto A = HochsterRing<Rationals>(zoo("O6")).to_algebra();
  const auto B = HochsterRing<Rationals>(zoo("I12")).to_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(thm4_ring(A, B, 6, 12, 3));
}
BENCHMARK(BM_ConnectedSumFormula)->Unit(benchmark::kMillisecond);

void BM_ConnectedSumDirect(benchmark::State& state) {
  const auto K = connected_sum(zoo("O6"), zoo("I12"));
  for (auto _ : state) benchmark::DoNotOptimize(HochsterRing<Rationals>(K).fingerprint(true));
}
BENCHMARK(BM_ConnectedSumDirect)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
