#include <benchmark/benchmark.h>

#include "votematch/approval_control.hpp"
#include "votematch/cover_audit.hpp"
#include "votematch/generate.hpp"
#include "votematch/io.hpp"
#include "votematch/veto_bribery.hpp"

using namespace votematch;

namespace {

void BM_ControlByReplacement(benchmark::State& state) {
  GenElectionOptions options;
  options.seed = 42;
  options.kind = ProblemKind::kCcrv;
  options.candidates = static_cast<int>(state.range(0));
  options.voters = static_cast<int>(state.range(1));
  options.unregistered = static_cast<int>(state.range(1));
  const CcrvInstance instance = to_ccrv_instance(gen_election(options));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_ccrv_2approval(instance));
  }
}
BENCHMARK(BM_ControlByReplacement)->Args({6, 20})->Args({8, 40})->Args({10, 50});

// The priced variant sweeps every candidate final score, multiplying solves.
void BM_PricedControlByReplacement(benchmark::State& state) {
  GenElectionOptions options;
  options.seed = 43;
  options.kind = ProblemKind::kPricedCcrv;
  options.candidates = 10;
  options.voters = static_cast<int>(state.range(0));
  options.unregistered = static_cast<int>(state.range(0));
  options.max_price = 3;
  options.limit = 5;
  const CcrvInstance instance = to_ccrv_instance(gen_election(options));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_priced_ccrv_2approval(instance));
  }
}
BENCHMARK(BM_PricedControlByReplacement)->Arg(10)->Arg(20)->Arg(40);

void BM_Bribery2Approval(benchmark::State& state) {
  GenElectionOptions options;
  options.seed = 44;
  options.kind = ProblemKind::kBribery;
  options.rule = Rule{RuleKind::kApproval, 2};
  options.candidates = 6;
  options.voters = static_cast<int>(state.range(0));
  options.max_budget = 5;
  const BriberyInstance instance = to_bribery_instance(gen_election(options));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_bribery_2approval(instance));
  }
}
BENCHMARK(BM_Bribery2Approval)->Arg(10)->Arg(20)->Arg(40);

// The split sweep tries every (bribed vetoing p, bribed other) pair, so cost
// grows with the veto count on the preferred candidate.
void BM_Bribery2Veto(benchmark::State& state) {
  GenElectionOptions options;
  options.seed = 45;
  options.kind = ProblemKind::kBribery;
  options.rule = Rule{RuleKind::kVeto, 2};
  options.candidates = 6;
  options.voters = static_cast<int>(state.range(0));
  options.max_budget = 5;
  const BriberyInstance instance = to_bribery_instance(gen_election(options));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_bribery_2veto(instance));
  }
}
BENCHMARK(BM_Bribery2Veto)->Arg(10)->Arg(16)->Arg(24);

void BM_Rx3cReductionRoundTrip(benchmark::State& state) {
  const Rx3cInstance source =
      gen_rx3c(static_cast<int>(state.range(0)), 46);
  for (auto _ : state) {
    BriberyInstance reduced = reduce_rx3c_to_3veto(source);
    benchmark::DoNotOptimize(solve_bribery_3veto_exact(reduced));
  }
}
BENCHMARK(BM_Rx3cReductionRoundTrip)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_CounterexampleAudit(benchmark::State& state) {
  for (auto _ : state) {
    BtCounterexample cx = build_bt_counterexample();
    benchmark::DoNotOptimize(verify_b_edge_cover(cx.problem, cx.published_cover));
    benchmark::DoNotOptimize(min_weight_b_edge_cover(cx.problem));
    benchmark::DoNotOptimize(solve_nmts_brute(cx.nmts));
  }
}
BENCHMARK(BM_CounterexampleAudit);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
