#include <benchmark/benchmark.h>

#include "frobw2/froblift.hpp"
#include "frobw2/random.hpp"
#include "frobw2/witt2.hpp"

using namespace frobw2;

namespace {

void BM_PolyMul(benchmark::State& state) {
  const CoeffRing& w = CoeffRing::w2(3);
  auto rng = trial_engine(7, 0);
  const RandomPolyShape shape{static_cast<int>(state.range(0)), 40, 0, false};
  const Poly f = random_poly(rng, w, 2, shape);
  const Poly g = random_poly(rng, w, 2, shape);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMul)->Arg(3)->Arg(6)->Arg(12);

void BM_PhiDeterminant(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  auto rng = trial_engine(11, p);
  const AffineChartLift F =
      random_lift(rng, CoeffRing::fq(p), 3, RandomPolyShape{static_cast<int>(p), 8, 0, true});
  for (auto _ : state) benchmark::DoNotOptimize(phi_det(F));
}
BENCHMARK(BM_PhiDeterminant)->Arg(2)->Arg(3)->Arg(5);

void BM_ApplyLift(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  const CoeffRing& k = CoeffRing::fq(p);
  auto rng = trial_engine(13, p);
  const AffineChartLift F = random_lift(rng, k, 2, RandomPolyShape{static_cast<int>(p), 6, 0, true});
  const Poly a = teichmuller_lift(random_poly(rng, k, 2, RandomPolyShape{3, 6, 0, true}));
  for (auto _ : state) benchmark::DoNotOptimize(apply_lift(F, a));
}
BENCHMARK(BM_ApplyLift)->Arg(2)->Arg(3)->Arg(5);

void BM_WittMul(benchmark::State& state) {
  const CoeffRing& k = CoeffRing::fq(17);
  const WittPair u(FqElem(k, 5), FqElem(k, 11));
  WittPair v(FqElem(k, 3), FqElem(k, 2));
  for (auto _ : state) {
    v = witt_mul(u, v);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_WittMul);

void BM_WittAdd(benchmark::State& state) {
  const CoeffRing& k = CoeffRing::fq(17);
  const WittPair u(FqElem(k, 5), FqElem(k, 11));
  WittPair v(FqElem(k, 3), FqElem(k, 2));
  for (auto _ : state) {
    v = witt_add(u, v);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_WittAdd);

}  // namespace

BENCHMARK_MAIN();
