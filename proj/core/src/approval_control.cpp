#include "votematch/approval_control.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace votematch {

namespace {

long long count_approving(const std::vector<Voter>& voters, const CandidateId& c) {
  long long count = 0;
  for (const Voter& voter : voters) {
    if (voter.vote.touches(c)) ++count;
  }
  return count;
}

long long price_sum(const std::vector<Voter>& voters) {
  long long sum = 0;
  for (const Voter& voter : voters) sum += voter.price;
  return sum;
}

// Common yes-path: turn the selected voter edges into a replacement plan,
// re-run the election, and insist the preferred candidate really wins with
// exactly the targeted score.
AttackDecision accept(const CcrvInstance& instance, const CcrvGraph& graph,
                      const MatchingSolution& solution) {
  const CcrvGraphMeta& meta = graph.meta;
  ReplacementPlan plan;
  std::vector<char> kept(static_cast<size_t>(meta.registered_count), 0);
  for (EdgeId id : solution.selected) {
    if (id < meta.registered_count) {
      kept[static_cast<size_t>(id)] = 1;
    } else if (id < meta.registered_count + meta.unregistered_count) {
      plan.added.push_back(id - meta.registered_count);
    }
  }
  for (int i = 0; i < meta.registered_count; ++i) {
    if (!kept[static_cast<size_t>(i)]) plan.removed.push_back(i);
  }
  if (plan.removed.size() != plan.added.size()) {
    throw std::logic_error("replacement extraction lost a voter");
  }

  AttackDecision decision;
  decision.yes = true;
  decision.objective = plan_cost(instance, plan);
  decision.target_score = meta.target_score;
  Election after = apply_replacement(instance, plan);
  if (!is_winner(after, instance.preferred)) {
    throw std::logic_error("replacement witness fails re-scoring: preferred does not win");
  }
  if (scores(after).at(instance.preferred) != meta.target_score) {
    throw std::logic_error("replacement witness fails re-scoring: wrong preferred score");
  }
  if (decision.objective > instance.limit) {
    throw std::logic_error("replacement witness exceeds the limit");
  }
  decision.replacement = std::move(plan);
  return decision;
}

// With two candidates every ballot approves both, so all scores are equal
// and everyone (including p) already wins.
bool two_candidate_shortcut(const CcrvInstance& instance, AttackDecision& decision) {
  if (instance.candidates.size() != 2) return false;
  decision.yes = true;
  decision.objective = 0;
  decision.replacement = ReplacementPlan{};
  decision.target_score = static_cast<long long>(instance.registered.size());
  return true;
}

std::optional<CcrvGraph> build_graph(const CcrvInstance& instance, long long target_score,
                                     bool priced) {
  const long long n = static_cast<long long>(instance.registered.size());
  std::vector<CandidateId> candidates = instance.candidates;
  std::sort(candidates.begin(), candidates.end());

  CcrvGraph graph;
  graph.meta.target_score = target_score;
  graph.meta.registered_count = static_cast<int>(instance.registered.size());
  graph.meta.unregistered_count = static_cast<int>(instance.unregistered.size());
  graph.problem.sense = Sense::kMaximize;

  Multigraph& g = graph.problem.graph;
  const VertexId x = g.add_vertex("x");
  std::vector<VertexId> cv(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    cv[i] = g.add_vertex(candidates[i].name());
  }
  auto vertex_of = [&](const CandidateId& c) {
    return cv[static_cast<size_t>(
        std::lower_bound(candidates.begin(), candidates.end(), c) - candidates.begin())];
  };

  for (const Voter& voter : instance.registered) {
    g.add_edge(vertex_of(voter.vote.chosen()[0]), vertex_of(voter.vote.chosen()[1]),
               priced ? voter.price : 1, "voter");
  }
  for (const Voter& voter : instance.unregistered) {
    g.add_edge(vertex_of(voter.vote.chosen()[0]), vertex_of(voter.vote.chosen()[1]),
               priced ? -voter.price : 0, "voter");
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == instance.preferred) continue;
    for (long long j = 0; j < target_score; ++j) {
      g.add_edge(cv[i], x, 0, "padding");
    }
  }

  const long long slack_demand =
      static_cast<long long>(candidates.size()) * target_score - 2 * n;
  if (slack_demand < 0) return std::nullopt;
  if (slack_demand > kMaxTransformedWeight) {
    throw std::overflow_error("slack demand does not fit the matching engine");
  }

  graph.problem.demand.assign(static_cast<size_t>(g.vertex_count()), 0);
  graph.problem.demand[static_cast<size_t>(x)] = static_cast<int>(slack_demand);
  for (VertexId v : cv) {
    graph.problem.demand[static_cast<size_t>(v)] = static_cast<int>(target_score);
  }

  graph.meta.threshold = priced ? price_sum(instance.registered) - instance.limit : n - instance.limit;
  return graph;
}

}  // namespace

long long canonical_target_score(const CcrvInstance& instance) {
  const long long n = static_cast<long long>(instance.registered.size());
  const long long vp = count_approving(instance.registered, instance.preferred);
  const long long wp = count_approving(instance.unregistered, instance.preferred);
  return vp + std::min({instance.limit, n - vp, wp});
}

std::optional<CcrvGraph> build_ccrv_graph(const CcrvInstance& instance) {
  return build_graph(instance, canonical_target_score(instance), /*priced=*/false);
}

std::optional<CcrvGraph> build_ccrv_graph(const CcrvInstance& instance, long long target_score) {
  return build_graph(instance, target_score, /*priced=*/true);
}

AttackDecision solve_ccrv_2approval(const CcrvInstance& instance) {
  validate(instance);
  if (instance.priced) {
    throw std::invalid_argument("instance is priced; use the priced solver");
  }
  AttackDecision decision;
  if (two_candidate_shortcut(instance, decision)) return decision;
  std::optional<CcrvGraph> graph = build_ccrv_graph(instance);
  if (!graph) return decision;  // target score unreachable outright
  SolveOutcome outcome = solve(graph->problem);
  if (!outcome.feasible() || outcome.solution->total_weight < graph->meta.threshold) {
    return decision;
  }
  return accept(instance, *graph, *outcome.solution);
}

AttackDecision solve_priced_ccrv_2approval(const CcrvInstance& instance) {
  validate(instance);
  if (!instance.priced) {
    throw std::invalid_argument("instance is unpriced; use the unpriced solver");
  }
  AttackDecision decision;
  if (two_candidate_shortcut(instance, decision)) return decision;
  const long long n = static_cast<long long>(instance.registered.size());
  for (long long fs = 0; fs <= n; ++fs) {
    std::optional<CcrvGraph> graph = build_ccrv_graph(instance, fs);
    if (!graph) continue;
    SolveOutcome outcome = solve(graph->problem);
    if (!outcome.feasible() || outcome.solution->total_weight < graph->meta.threshold) {
      continue;
    }
    return accept(instance, *graph, *outcome.solution);
  }
  return decision;
}

AttackDecision solve_bribery_2approval(const BriberyInstance& instance) {
  validate(instance);
  if (instance.rule.kind != RuleKind::kApproval || instance.rule.k != 2) {
    throw std::invalid_argument("this solver handles the 2-approval rule only");
  }

  CcrvInstance control{instance.candidates, instance.voters, {}, instance.preferred,
                       instance.budget,     /*priced=*/true};
  std::vector<CandidateId> sorted = instance.candidates;
  std::sort(sorted.begin(), sorted.end());
  const int n = static_cast<int>(instance.voters.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      Voter copy{Vote(VoteKind::kApprove, {sorted[i], sorted[j]}), 0};
      for (int r = 0; r < n; ++r) control.unregistered.push_back(copy);
    }
  }

  AttackDecision inner = solve_priced_ccrv_2approval(control);
  AttackDecision decision;
  decision.yes = inner.yes;
  decision.objective = inner.objective;
  decision.target_score = inner.target_score;
  if (!inner.yes) return decision;

  BriberyPlan plan;
  plan.bribed = inner.replacement->removed;
  for (size_t i = 0; i < plan.bribed.size(); ++i) {
    plan.new_votes.push_back(
        control.unregistered[static_cast<size_t>(inner.replacement->added[i])].vote);
  }
  Election after = apply_bribery(to_election(instance), plan);
  if (!is_winner(after, instance.preferred)) {
    throw std::logic_error("bribery witness fails re-scoring: preferred does not win");
  }
  if (plan_cost(instance, plan) > instance.budget) {
    throw std::logic_error("bribery witness exceeds the budget");
  }
  decision.objective = plan_cost(instance, plan);
  decision.bribery = std::move(plan);
  return decision;
}

}  // namespace votematch
