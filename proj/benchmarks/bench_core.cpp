#include <benchmark/benchmark.h>

#include <random>

#include "pathideal/betti.hpp"
#include "pathideal/engine.hpp"
#include "pathideal/random_gen.hpp"
#include "pathideal/splitting.hpp"

using namespace pathideal;

static void BM_betti_oracle_cycle(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  SquarefreeIdeal ideal = path_ideal(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, 2));
}
BENCHMARK(BM_betti_oracle_cycle)->DenseRange(8, 13);

static void BM_betti_oracle_modp(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  SquarefreeIdeal ideal = path_ideal(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, 32003));
}
BENCHMARK(BM_betti_oracle_modp)->DenseRange(8, 12);

static void BM_betti_oracle_random_unicyclic(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Graph g = random_unicyclic(static_cast<int>(state.range(0)), rng);
  SquarefreeIdeal ideal = path_ideal(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, 2));
}
BENCHMARK(BM_betti_oracle_random_unicyclic)->Arg(10)->Arg(12)->Arg(13);

static void BM_nu3_recursion_tree(benchmark::State& state) {
  std::mt19937_64 rng(11);
  Graph g = random_tree(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    Nu3Memo memo;
    benchmark::DoNotOptimize(nu3_recursive_in(g, g.vertices(), &memo));
  }
}
BENCHMARK(BM_nu3_recursion_tree)->Arg(24)->Arg(40)->Arg(60);

static void BM_path_enumeration(benchmark::State& state) {
  std::mt19937_64 rng(21);
  Graph g = random_unicyclic(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_t_paths(g, 3));
}
BENCHMARK(BM_path_enumeration)->Arg(16)->Arg(32)->Arg(48);

static void BM_engine_example(benchmark::State& state) {
  Graph g = parse_edge_list(
      "v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v6\nv1 v6\n"
      "v1 x1\nv1 x2\nv1 x3\nv1 x4\nv2 x5\nv2 x6\n"
      "x1 y1\nx1 y2\nx1 y3\nx1 y4\nx5 y5\nx5 y6\n"
      "y1 z1\ny1 z2\ny1 z3\ny1 z4\ny6 z5\n");
  for (auto _ : state) {
    EngineSession session(g);
    benchmark::DoNotOptimize(session.pd_ideal(g.vertices()));
    benchmark::DoNotOptimize(session.reg_ideal(g.vertices()));
  }
}
BENCHMARK(BM_engine_example);

static void BM_leaf_splitting(benchmark::State& state) {
  std::mt19937_64 rng(31);
  Graph g = random_tree(static_cast<int>(state.range(0)), rng);
  CycleStructure cs = classify(g);
  auto ctx = deepest_leaf(g, cs);
  for (auto _ : state) benchmark::DoNotOptimize(leaf_splitting(g, *ctx));
}
BENCHMARK(BM_leaf_splitting)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
