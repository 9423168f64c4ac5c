#include <benchmark/benchmark.h>

#include "betalab/instances.hpp"
#include "betalab/perturbation.hpp"
#include "betalab/stability.hpp"

using namespace betalab;

namespace {

void BM_CombSpaceBuild(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_comb_space({2, depth, std::nullopt}));
  }
}
BENCHMARK(BM_CombSpaceBuild)->Arg(3)->Arg(6)->Arg(10);

void BM_CayleyBallPermutations(benchmark::State& state) {
  const Instance c6 = build_c6();
  const CayleyBall ball =
      c6.group.cayley_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(c6.action.ball_permutations(ball));
  }
}
BENCHMARK(BM_CayleyBallPermutations)->Arg(3)->Arg(8);

void BM_GammaSet(benchmark::State& state) {
  const Instance comb = build_comb_space({2, 3, std::nullopt});
  const PerturbationSet family =
      enumerate_perturbations(comb.action, rat(1, 3), 1);
  const Action& psi = family.actions.back();
  for (auto _ : state) {
    for (Point x = 0; x < comb.space->size(); ++x) {
      benchmark::DoNotOptimize(gamma_set(comb.action, psi, x, rat(1, 3), 1));
    }
  }
}
BENCHMARK(BM_GammaSet);

void BM_EnumeratePerturbations(benchmark::State& state) {
  const Instance comb = build_comb_space({2, 3, std::nullopt});
  const Rational delta(1, static_cast<long long>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_perturbations(comb.action, delta, 1));
  }
}
BENCHMARK(BM_EnumeratePerturbations)->Arg(3)->Arg(2);

void BM_PersistentPoints(benchmark::State& state) {
  const Instance comb = build_comb_space({2, 3, std::nullopt});
  const PerturbationSet family =
      enumerate_perturbations(comb.action, rat(1, 3), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        persistent_points(comb.action, rat(1, 3), family, 1));
  }
}
BENCHMARK(BM_PersistentPoints);

void BM_StablePoints(benchmark::State& state) {
  const Instance c6 = build_c6();
  const PerturbationSet family =
      enumerate_perturbations(c6.action, rat(1), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stable_points(c6.action, rat(1), family, 3));
  }
}
BENCHMARK(BM_StablePoints);

void BM_SamplePerturbations(benchmark::State& state) {
  const Instance comb = build_comb_space({2, 3, std::nullopt});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_perturbations(comb.action, rat(1, 3), 2, 9, 25));
  }
}
BENCHMARK(BM_SamplePerturbations);

}  // namespace

BENCHMARK_MAIN();
