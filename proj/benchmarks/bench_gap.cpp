#include <benchmark/benchmark.h>

#include "gap/gap.hpp"

namespace {

const gap::HypergeomParams kParams{gap::Rational(3), gap::Rational(1), gap::Rational(7)};

void BM_BernoulliSeries(benchmark::State& state) {
  const auto family = gap::builtin_family(gap::FamilyKind::bernoulli);
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family.series(order));
}
BENCHMARK(BM_BernoulliSeries)->Arg(10)->Arg(20)->Arg(40);

void BM_GapExplicit(benchmark::State& state) {
  const auto family = gap::builtin_family(gap::FamilyKind::bernoulli);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap::gap_explicit(family, kParams, n));
}
BENCHMARK(BM_GapExplicit)->Arg(5)->Arg(10)->Arg(20);

void BM_GapFromGenerating(benchmark::State& state) {
  const auto family = gap::builtin_family(gap::FamilyKind::bernoulli);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap::gap_from_generating(family, kParams, n));
}
BENCHMARK(BM_GapFromGenerating)->Arg(5)->Arg(10)->Arg(20);

void BM_GapByRecurrence(benchmark::State& state) {
  const auto family = gap::builtin_family(gap::FamilyKind::bernoulli);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap::gap_by_recurrence(family, kParams, n));
}
BENCHMARK(BM_GapByRecurrence)->Arg(5)->Arg(10)->Arg(20);

void BM_OdeResidual(benchmark::State& state) {
  const auto family = gap::builtin_family(gap::FamilyKind::euler);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gap::ode_residual(gap::ResidualKind::ode_u, family, kParams, n, gap::Rational(static_cast<long>(n) + 1)));
  }
}
BENCHMARK(BM_OdeResidual)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
