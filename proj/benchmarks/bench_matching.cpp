#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "votematch/blossom.hpp"
#include "votematch/bmatching.hpp"
#include "votematch/cover_audit.hpp"

using namespace votematch;

namespace {

long long draw(std::mt19937_64& rng, long long hi) {
  return static_cast<long long>(rng() % static_cast<unsigned long long>(hi + 1));
}

// A dense random simple graph: every pair gets an edge with weight -5..9.
std::vector<WeightedEdge> dense_graph(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.push_back(WeightedEdge{u, v, draw(rng, 14) - 5});
    }
  }
  return edges;
}

// A cycle plus random chords with demand 2 everywhere: the cycle itself is a
// perfect 2-matching, so the instance is always feasible.
PerfectBMatchingProblem cycle_with_chords(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  PerfectBMatchingProblem problem;
  for (int v = 0; v < n; ++v) problem.graph.add_vertex("v" + std::to_string(v + 1));
  for (int v = 0; v < n; ++v) {
    problem.graph.add_edge(v, (v + 1) % n, draw(rng, 14) - 5);
  }
  for (int c = 0; c < n; ++c) {
    int u = static_cast<int>(draw(rng, n - 1));
    int v = static_cast<int>(draw(rng, n - 1));
    if (u == v) v = (u + 2) % n;
    if (u != v) problem.graph.add_edge(u, v, draw(rng, 14) - 5);
  }
  problem.demand.assign(static_cast<size_t>(n), 2);
  problem.sense = Sense::kMaximize;
  return problem;
}

void BM_MaxWeightMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<WeightedEdge> edges = dense_graph(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_weight_matching(n, edges, false));
  }
}
BENCHMARK(BM_MaxWeightMatching)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_PerfectBMatching(benchmark::State& state) {
  const PerfectBMatchingProblem problem =
      cycle_with_chords(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(problem));
  }
}
BENCHMARK(BM_PerfectBMatching)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_TutteExpansion(benchmark::State& state) {
  const PerfectBMatchingProblem problem =
      cycle_with_chords(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tutte_expand(problem));
  }
}
BENCHMARK(BM_TutteExpansion)->Arg(16)->Arg(64);

void BM_MinEdgeCover(benchmark::State& state) {
  const PerfectBMatchingProblem base =
      cycle_with_chords(static_cast<int>(state.range(0)), 4);
  BEdgeCoverProblem problem{base.graph, std::vector<int>(base.demand.size(), 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_b_edge_cover(problem));
  }
}
BENCHMARK(BM_MinEdgeCover)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
