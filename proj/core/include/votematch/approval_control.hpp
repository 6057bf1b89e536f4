#pragma once

#include <optional>

#include "votematch/attack.hpp"
#include "votematch/bmatching.hpp"

// 2-approval control by replacing voters, solved through maximum-weight
// perfect b-matching: vertices are the candidates plus one slack vertex x,
// every voter (registered or not) is an edge between the two candidates they
// approve, and demands force the replacement election's score profile.

namespace votematch {

struct CcrvGraphMeta {
  long long target_score = 0;  // exact final score of the preferred candidate
  Weight threshold = 0;        // yes iff max matching weight >= threshold
  int registered_count = 0;    // voter edge ids: V is [0, r), W is [r, r+u)
  int unregistered_count = 0;
};

struct CcrvGraph {
  PerfectBMatchingProblem problem;
  CcrvGraphMeta meta;
};

// Largest achievable final score for the preferred candidate:
// |V_p| + min(limit, n - |V_p|, |W_p|).
long long canonical_target_score(const CcrvInstance& instance);

// Unpriced graph at the canonical target score; voter edges weigh 1 (V) or
// 0 (W), threshold n - limit. nullopt when the slack demand would be
// negative, i.e. the target score is unreachable outright.
std::optional<CcrvGraph> build_ccrv_graph(const CcrvInstance& instance);

// Graph for one fixed final score. Priced instances weigh voter edges
// price(v) / -price(w) with threshold pi(V) - budget.
std::optional<CcrvGraph> build_ccrv_graph(const CcrvInstance& instance,
                                          long long target_score);

AttackDecision solve_ccrv_2approval(const CcrvInstance& instance);

// Tries every final score 0..n in ascending order, first success wins.
AttackDecision solve_priced_ccrv_2approval(const CcrvInstance& instance);

// 2-approval bribery, reduced to priced replacement control: the bribed
// voters are removed, and n free copies of every possible 2-approval vote
// stand ready to be added.
AttackDecision solve_bribery_2approval(const BriberyInstance& instance);

}  // namespace votematch
