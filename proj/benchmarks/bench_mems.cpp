#include <benchmark/benchmark.h>

#include <random>

#include "graphmems/efg.hpp"
#include "graphmems/efg_index.hpp"
#include "graphmems/efg_mems.hpp"
#include "graphmems/mem_finder.hpp"
#include "graphmems/rmq.hpp"
#include "graphmems/suffix_tree.hpp"
#include "harness.hpp"

using namespace gm;

namespace {

struct Fixture {
  NaiveEfg efg;
  std::vector<std::string> queries;
};

Fixture founderGraph(std::size_t rows, std::size_t length) {
  auto msa = tools::syntheticMsa(rows, length, 0.01, tools::MutationModel::Genealogy, 7);
  for (std::size_t width = 20;; width += 10) {
    auto e = buildNaiveEfg(msa, tools::uniformBoundaries(length, width));
    if (validateSemiRepeatFree(e.graph, e.efg).ok)
      return {std::move(e), tools::sampleQueries(msa, 100, 100, 2, 11)};
  }
}

SymbolString randomText(std::size_t n) {
  std::mt19937_64 rng(3);
  SymbolString s(n);
  for (auto& c : s) c = sym::kFirst + static_cast<Symbol>(rng() % 4);
  return s;
}

void BM_SuffixArray(benchmark::State& state) {
  auto text = randomText(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SuffixArrayIndex(text, sym::kFirst + 4));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SuffixArray)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

void BM_SuffixTree(benchmark::State& state) {
  auto text = randomText(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SuffixTree(text, sym::kFirst + 4));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SuffixTree)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

void BM_ListAtMost(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<std::int64_t> v(1 << 20);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 1000);
  RmqStructure r(v);
  std::vector<std::size_t> out;
  for (auto _ : state) {
    out.clear();
    r.listAtMost(0, v.size() - 1, state.range(0), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["reported"] = static_cast<double>(out.size());
}
BENCHMARK(BM_ListAtMost)->Arg(0)->Arg(10)->Arg(100);

void BM_ExactLMems(benchmark::State& state) {
  static Fixture f = founderGraph(20, 1000);
  QuerySet qs(f.queries, f.efg.graph.alphabet());
  PathIndex index(f.efg.graph, buildPathsText(f.efg.graph, static_cast<std::size_t>(state.range(0))));
  std::size_t found = 0;
  for (auto _ : state) found = findExactLMems(f.efg.graph, index, qs, 16).size();
  state.counters["mems"] = static_cast<double>(found);
}
BENCHMARK(BM_ExactLMems)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EfgIndexBuild(benchmark::State& state) {
  auto f = founderGraph(static_cast<std::size_t>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(buildEfgIndex(f.efg.graph, f.efg.efg));
}
BENCHMARK(BM_EfgIndexBuild)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EfgMems(benchmark::State& state) {
  auto f = founderGraph(static_cast<std::size_t>(state.range(0)), 1000);
  auto idx = buildEfgIndex(f.efg.graph, f.efg.efg);
  QuerySet qs(f.queries, f.efg.graph.alphabet());
  std::size_t found = 0;
  for (auto _ : state) found = findEfgMems(idx, qs, 16).size();
  state.counters["mems"] = static_cast<double>(found);
}
BENCHMARK(BM_EfgMems)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
