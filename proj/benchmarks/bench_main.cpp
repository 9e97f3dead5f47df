#include <benchmark/benchmark.h>

#include "burnside/analyzer.hpp"
#include "burnside/bounds.hpp"
#include "burnside/cayley_group.hpp"
#include "burnside/laws.hpp"
#include "burnside/make_group.hpp"
#include "burnside/tower.hpp"
#include "burnside/word.hpp"

using namespace burnside;

namespace {

void BM_TowerAdd(benchmark::State& state) {
  const TowerNumber a = TowerNumber::from_parts(static_cast<std::uint64_t>(state.range(0)), Real("0.7"));
  const TowerNumber b = TowerNumber::from_parts(static_cast<std::uint64_t>(state.range(0)), Real("0.4"));
  for (auto _ : state) benchmark::DoNotOptimize(add_t(a, b));
}
BENCHMARK(BM_TowerAdd)->Arg(3)->Arg(6)->Arg(20)->Arg(200);

void BM_TowerMul(benchmark::State& state) {
  const TowerNumber a = TowerNumber::from_parts(static_cast<std::uint64_t>(state.range(0)), Real("0.7"));
  const TowerNumber b = TowerNumber::from_parts(static_cast<std::uint64_t>(state.range(0)) - 1, Real("0.9"));
  for (auto _ : state) benchmark::DoNotOptimize(mul_t(a, b));
}
BENCHMARK(BM_TowerMul)->Arg(3)->Arg(6)->Arg(20)->Arg(200);

void BM_SchreierSims(benchmark::State& state) {
  const PermGroup proto = alternating_group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    // a fresh group has no cached chain
    const PermGroup g(proto.degree(), proto.generators());
    benchmark::DoNotOptimize(g.order_big());
  }
}
BENCHMARK(BM_SchreierSims)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_LawCheckAlt5(benchmark::State& state) {
  const CayleyGroup g = CayleyGroup::from_perm_group(alternating_group(5));
  const Word w = parse_word("x^30 [x,y]^30");
  LawOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_law(w, g, opt));
}
BENCHMARK(BM_LawCheckAlt5)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMicrosecond);

void BM_GeneratingPairs(benchmark::State& state) {
  const CayleyGroup g = CayleyGroup::from_perm_group(alternating_group(5));
  for (auto _ : state) benchmark::DoNotOptimize(count_generating_tuples(g, 2));
}
BENCHMARK(BM_GeneratingPairs)->Unit(benchmark::kMillisecond);

void BM_MainTheoremBound(benchmark::State& state) {
  const Word w = parse_word("x^" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(main_theorem_bound(w, 2));
}
BENCHMARK(BM_MainTheoremBound)->Arg(6)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const Word w = parse_word("x^60");
  for (auto _ : state) benchmark::DoNotOptimize(classify(w, 2));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
