#include <benchmark/benchmark.h>

#include "fockcryst/supports.hpp"

using namespace fockcryst;

namespace {

FockParam chamber(long s2) { return FockParam::rational(Rat(-1, 2), {Rat(0), Rat(s2)}); }

void BM_Depth(benchmark::State& state) {
  FockParam p = chamber(-4);
  auto all = multipartitions_of(2, state.range(0));
  for (auto _ : state) {
    long total = 0;
    for (const auto& lam : all) total += depth(lam, p);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_Depth)->Arg(4)->Arg(6)->Arg(8);

void BM_QDepthWithTransport(benchmark::State& state) {
  FockParam p = chamber(2);  // three walls away from the asymptotic chamber
  auto all = multipartitions_of(2, state.range(0));
  for (auto _ : state) {
    long total = 0;
    for (const auto& lam : all) total += q_depth(lam, p);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_QDepthWithTransport)->Arg(4)->Arg(6);

void BM_SupportTable(benchmark::State& state) {
  FockParam p = chamber(-4);
  for (auto _ : state) {
    auto rows = support_table(p, state.range(0));
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_SupportTable)->Arg(4)->Arg(6);

void BM_PairCrossing(benchmark::State& state) {
  auto all = multipartitions_of(2, state.range(0));
  for (auto _ : state) {
    for (const auto& lam : all) {
      auto img = wc_pair({lam.comp(0), lam.comp(1)}, -2, PairSide::FirstSlot);
      benchmark::DoNotOptimize(img.first);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_PairCrossing)->Arg(4)->Arg(6)->Arg(8);

void BM_Mullineux(benchmark::State& state) {
  auto all = partitions_of(state.range(0));
  for (auto _ : state) {
    for (const auto& lam : all) {
      if (!is_e_corestricted(lam, 3)) continue;
      benchmark::DoNotOptimize(mullineux(lam, 3));
    }
  }
}
BENCHMARK(BM_Mullineux)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
