#include <benchmark/benchmark.h>

#include "tlwb/oracle.hpp"
#include "tlwb/ranker.hpp"
#include "tlwb/syntax.hpp"

using namespace tlwb;

namespace {

void BM_CheckEquiv(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const int len = static_cast<int>(state.range(1));
  AnyFormula f = parse_formula("G(a -> F b)", Logic::Ltl);
  AnyFormula g = parse_formula("G(!a | F b)", Logic::Ltl);
  for (auto _ : state) {
    Verdict v = check_equiv(f, g, Alphabet("ab"), len, {.parallel = parallel});
    benchmark::DoNotOptimize(v.kind);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(word_count(Alphabet("ab"), len)));
}

void BM_BruteSatUnsat(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const int len = static_cast<int>(state.range(1));
  AnyFormula f = parse_formula("EP(Y{c} X{a} TOP) & !EP(Y{c} X{a} TOP)", Logic::Xy);
  for (auto _ : state) {
    Verdict v = brute_sat(f, Alphabet("abcd"), len, {.parallel = parallel});
    benchmark::DoNotOptimize(v.kind);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(word_count(Alphabet("abcd"), len)));
}

void BM_SatXy(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  XyFormula f = std::get<XyFormula>(parse_formula("X{b} Y{c} !(X{d} X{b} !Y{b} TOP)", Logic::Xy));
  for (auto _ : state) {
    auto w = sat_xy(f, {.parallel = parallel});
    benchmark::DoNotOptimize(w);
  }
}

}  // namespace

BENCHMARK(BM_CheckEquiv)->ArgNames({"parallel", "len"})->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSatUnsat)->ArgNames({"parallel", "len"})->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SatXy)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
