#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "test_util.hpp"
#include "votematch/approval_control.hpp"
#include "votematch/generate.hpp"
#include "votematch/io.hpp"
#include "votematch/oracles.hpp"

using namespace votematch;

namespace {

CandidateId cid(const char* name) { return CandidateId(name); }

Voter approve2(const char* a, const char* b, long long price = 1) {
  return Voter{Vote(VoteKind::kApprove, {cid(a), cid(b)}), price};
}

CcrvInstance example_control_instance() {
  return to_ccrv_instance(parse_problem(testutil::slurp(testutil::fixture_path("ex1.election"))));
}

std::map<std::string, int> demands_by_name(const PerfectBMatchingProblem& problem) {
  std::map<std::string, int> result;
  for (int v = 0; v < problem.graph.vertex_count(); ++v) {
    result[problem.graph.vertex_name(v)] = problem.demand[static_cast<size_t>(v)];
  }
  return result;
}

bool witness_ok(const CcrvInstance& instance, const AttackDecision& decision) {
  if (!decision.yes || !decision.replacement) return false;
  if (plan_cost(instance, *decision.replacement) > instance.limit) return false;
  return is_winner(apply_replacement(instance, *decision.replacement), instance.preferred);
}

}  // namespace

TEST_CASE("the replacement-control example solves at final score 3") {
  CcrvInstance instance = example_control_instance();
  CHECK(canonical_target_score(instance) == 3);

  AttackDecision decision = solve_ccrv_2approval(instance);
  CHECK(decision.yes);
  REQUIRE(decision.target_score.has_value());
  CHECK(*decision.target_score == 3);
  REQUIRE(decision.replacement.has_value());
  CHECK(decision.replacement->removed.size() <= 3);
  CHECK(decision.objective == static_cast<long long>(decision.replacement->removed.size()));

  Election after = apply_replacement(instance, *decision.replacement);
  CHECK(is_winner(after, instance.preferred));
  ScoreProfile final_scores = scores(after);
  CHECK(final_scores.at(instance.preferred) == 3);
  for (const auto& [c, s] : final_scores) CHECK(s <= 3);
}

TEST_CASE("the example's graph carries the published demands and threshold") {
  CcrvInstance instance = example_control_instance();
  std::optional<CcrvGraph> graph = build_ccrv_graph(instance);
  REQUIRE(graph.has_value());
  CHECK(graph->meta.target_score == 3);
  CHECK(graph->meta.threshold == 2);  // keep at least n - limit = 2 registered voters
  CHECK(graph->meta.registered_count == 5);
  CHECK(graph->meta.unregistered_count == 4);
  CHECK(graph->problem.sense == Sense::kMaximize);

  auto demands = demands_by_name(graph->problem);
  CHECK(demands ==
        std::map<std::string, int>{{"x", 2}, {"a", 3}, {"b", 3}, {"c", 3}, {"p", 3}});
  // 9 voter edges plus 3 padding copies for each of a, b, c.
  CHECK(graph->problem.graph.edge_count() == 18);

  // The matching drawn in the construction: keep the two pb voters, add
  // pa + ac + ac, absorb one spare b and one spare c in x. Weight 2 equals
  // the threshold exactly.
  MatchingSolution drawn{{3, 4, 5, 6, 8, 12, 15}, 2};
  CHECK_FALSE(verify(graph->problem, drawn).has_value());

  // Dropping a padding edge starves the slack vertex.
  auto violation = verify(graph->problem, MatchingSolution{{3, 4, 5, 6, 8, 15}, 2});
  REQUIRE(violation.has_value());
  CHECK(violation->kind == MatchingViolation::Kind::kDemand);
  CHECK(violation->vertex == 0);  // x

  // The optimum keeps 3 of the 5 registered voters.
  SolveOutcome outcome = solve(graph->problem);
  REQUIRE(outcome.feasible());
  CHECK(outcome.solution->total_weight == 3);
}

TEST_CASE("an unreachable target score yields an outright no") {
  CcrvInstance instance{{cid("p"), cid("a"), cid("b")},
                        {approve2("a", "b"), approve2("a", "b"), approve2("a", "b"),
                         approve2("a", "b"), approve2("a", "b")},
                        {},
                        cid("p"),
                        0,
                        false};
  // 3 * 0 < 2 * 5: the slack vertex would need negative demand.
  CHECK_FALSE(build_ccrv_graph(instance, 0).has_value());
  AttackDecision decision = solve_ccrv_2approval(instance);
  CHECK_FALSE(decision.yes);
}

TEST_CASE("two candidates always tie under 2-approval") {
  CcrvInstance instance{{cid("p"), cid("q")},
                        {approve2("p", "q"), approve2("p", "q"), approve2("p", "q")},
                        {},
                        cid("p"),
                        0,
                        false};
  AttackDecision decision = solve_ccrv_2approval(instance);
  CHECK(decision.yes);
  CHECK(decision.objective == 0);
  REQUIRE(decision.replacement.has_value());
  CHECK(decision.replacement->removed.empty());
  CHECK(decision.target_score == 3);
}

TEST_CASE("instances route to the solver matching their pricing") {
  CcrvInstance unpriced = example_control_instance();
  CHECK_THROWS_AS(solve_priced_ccrv_2approval(unpriced), std::invalid_argument);
  CcrvInstance priced = unpriced;
  priced.priced = true;
  CHECK_THROWS_AS(solve_ccrv_2approval(priced), std::invalid_argument);
}

TEST_CASE("unpriced limits beyond the registered list are rejected") {
  CcrvInstance instance = example_control_instance();
  instance.limit = 6;
  CHECK_THROWS_AS(validate(instance), std::invalid_argument);
  instance.limit = -1;
  CHECK_THROWS_AS(validate(instance), std::invalid_argument);
}

TEST_CASE("unpriced control is monotone in the replacement limit") {
  for (unsigned long long seed = 50; seed < 60; ++seed) {
    GenElectionOptions options;
    options.seed = seed;
    options.candidates = 4;
    options.voters = 5;
    options.unregistered = 5;
    options.kind = ProblemKind::kCcrv;
    CcrvInstance instance = to_ccrv_instance(gen_election(options));
    CAPTURE(seed);
    bool previous = false;
    for (long long limit = 0; limit <= 5; ++limit) {
      instance.limit = limit;
      AttackDecision decision = solve_ccrv_2approval(instance);
      if (previous) CHECK(decision.yes);
      previous = decision.yes;
      if (decision.yes) CHECK(witness_ok(instance, decision));
    }
  }
}

TEST_CASE("priced control picks the smallest feasible final score") {
  // p is approved once; bringing in the free p-voter while dropping an ab
  // voter wins at final score 2 even though higher scores also work.
  CcrvInstance instance{{cid("p"), cid("a"), cid("b"), cid("c")},
                        {approve2("p", "c"), approve2("a", "b"), approve2("a", "b")},
                        {approve2("p", "c", 0), approve2("c", "b", 0)},
                        cid("p"),
                        2,
                        true};
  AttackDecision decision = solve_priced_ccrv_2approval(instance);
  CHECK(decision.yes);
  REQUIRE(decision.target_score.has_value());
  // Scores sum to 2n, so p cannot win with 0 or 1 points; 2 is feasible.
  CHECK(*decision.target_score == 2);
  CHECK(brute_ccrv(instance).yes);
  CHECK(witness_ok(instance, decision));
}

TEST_CASE("control solvers agree with the enumeration oracle on random instances") {
  for (unsigned long long seed = 100; seed < 140; ++seed) {
    GenElectionOptions options;
    options.seed = seed;
    options.candidates = 4 + static_cast<int>(seed % 2);
    options.voters = 3 + static_cast<int>(seed % 4);
    options.unregistered = 3 + static_cast<int>((seed / 2) % 4);
    options.kind = seed % 2 == 0 ? ProblemKind::kCcrv : ProblemKind::kPricedCcrv;
    CcrvInstance instance = to_ccrv_instance(gen_election(options));
    CAPTURE(seed);
    AttackDecision fast = instance.priced ? solve_priced_ccrv_2approval(instance)
                                          : solve_ccrv_2approval(instance);
    AttackDecision slow = brute_ccrv(instance);
    CHECK(fast.yes == slow.yes);
    if (fast.yes) CHECK(witness_ok(instance, fast));
  }
}

TEST_CASE("2-approval bribery reduces to priced control and verifies its plans") {
  // p trails by two approvals; bribing the two ab voters fixes it.
  BriberyInstance instance{{cid("p"), cid("a"), cid("b"), cid("c")},
                           {approve2("a", "b"), approve2("a", "b"), approve2("p", "c")},
                           cid("p"),
                           2,
                           Rule{RuleKind::kApproval, 2}};
  AttackDecision decision = solve_bribery_2approval(instance);
  CHECK(decision.yes);
  REQUIRE(decision.bribery.has_value());
  CHECK(plan_cost(instance, *decision.bribery) <= instance.budget);
  CHECK(is_winner(apply_bribery(to_election(instance), *decision.bribery), instance.preferred));

  BriberyInstance veto = instance;
  veto.rule = Rule{RuleKind::kVeto, 2};
  for (Voter& voter : veto.voters) {
    voter.vote = Vote(VoteKind::kVeto, voter.vote.chosen());
  }
  CHECK_THROWS_AS(solve_bribery_2approval(veto), std::invalid_argument);
}

TEST_CASE("an already-winning candidate needs no bribes") {
  BriberyInstance instance{{cid("p"), cid("a"), cid("b")},
                           {approve2("p", "a"), approve2("p", "b")},
                           cid("p"),
                           0,
                           Rule{RuleKind::kApproval, 2}};
  AttackDecision decision = solve_bribery_2approval(instance);
  CHECK(decision.yes);
  CHECK(decision.objective == 0);
  REQUIRE(decision.bribery.has_value());
  CHECK(decision.bribery->bribed.empty());
}

TEST_CASE("2-approval bribery agrees with the enumeration oracle") {
  for (unsigned long long seed = 200; seed < 230; ++seed) {
    GenElectionOptions options;
    options.seed = seed;
    options.candidates = 4 + static_cast<int>(seed % 2);
    options.voters = 3 + static_cast<int>(seed % 4);
    options.kind = ProblemKind::kBribery;
    options.rule = Rule{RuleKind::kApproval, 2};
    BriberyInstance instance = to_bribery_instance(gen_election(options));
    CAPTURE(seed);
    AttackDecision fast = solve_bribery_2approval(instance);
    AttackDecision slow = brute_bribery(instance);
    CHECK(fast.yes == slow.yes);
    if (fast.yes) {
      REQUIRE(fast.bribery.has_value());
      CHECK(plan_cost(instance, *fast.bribery) <= instance.budget);
      CHECK(is_winner(apply_bribery(to_election(instance), *fast.bribery), instance.preferred));
    }
  }
}
