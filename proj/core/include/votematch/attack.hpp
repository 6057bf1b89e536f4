#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "votematch/election.hpp"

// Shared problem-instance and result types for the control and bribery
// solvers. All indices refer to positions in the instance's voter lists.

namespace votematch {

// Control by replacing voters: swap some registered voters (V) for the same
// number of unregistered ones (W). Unpriced instances bound the number of
// swaps by `limit`; priced instances bound the total price of everyone
// touched (removed and added) by `limit` instead.
struct CcrvInstance {
  std::vector<CandidateId> candidates;
  std::vector<Voter> registered;    // V
  std::vector<Voter> unregistered;  // W
  CandidateId preferred;
  long long limit = 0;
  bool priced = false;
};

// Throws std::invalid_argument on malformed instances (unknown preferred
// candidate, non 2-approval votes, bad limit, ...).
void validate(const CcrvInstance& instance);

struct BriberyInstance {
  std::vector<CandidateId> candidates;
  std::vector<Voter> voters;
  CandidateId preferred;
  long long budget = 0;
  Rule rule;
};

void validate(const BriberyInstance& instance);
Election to_election(const BriberyInstance& instance);

// removed[i] (index into V) is replaced by added[i] (index into W).
struct ReplacementPlan {
  std::vector<int> removed;
  std::vector<int> added;
};

// bribed[i] (index into the voter list) now casts new_votes[i].
struct BriberyPlan {
  std::vector<int> bribed;
  std::vector<Vote> new_votes;
};

struct AttackDecision {
  bool yes = false;
  long long objective = 0;  // swaps used, or total price paid
  std::optional<ReplacementPlan> replacement;
  std::optional<BriberyPlan> bribery;
  // Exact final score (approval) / veto count (veto) of the preferred
  // candidate that the accepted plan produces, when one was targeted.
  std::optional<long long> target_score;
  // For 2-veto bribery: accepted (bribed vetoing p, bribed not vetoing p).
  std::optional<std::pair<int, int>> bribe_split;
};

// The election after carrying out a plan. Both validate the plan (index
// ranges, no duplicates, equal lengths) and throw std::invalid_argument.
Election apply_replacement(const CcrvInstance& instance, const ReplacementPlan& plan);
Election apply_bribery(const Election& e, const BriberyPlan& plan);

long long plan_cost(const CcrvInstance& instance, const ReplacementPlan& plan);
long long plan_cost(const BriberyInstance& instance, const BriberyPlan& plan);

}  // namespace votematch
