#include "votematch/attack.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace votematch {

namespace {

void check_candidates(const std::vector<CandidateId>& candidates, const CandidateId& preferred) {
  std::vector<CandidateId> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate candidate");
  }
  if (sorted.empty()) throw std::invalid_argument("no candidates");
  if (!std::binary_search(sorted.begin(), sorted.end(), preferred)) {
    throw std::invalid_argument("preferred candidate " + preferred.name() + " is not a candidate");
  }
}

void check_voters(const std::vector<Voter>& voters, const std::vector<CandidateId>& candidates,
                  VoteKind kind, int arity, const char* which) {
  for (const Voter& voter : voters) {
    if (voter.vote.kind() != kind) {
      throw std::invalid_argument(std::string(which) + " voter has the wrong vote kind");
    }
    if (voter.vote.arity() != arity) {
      throw std::invalid_argument(std::string(which) + " voter chooses " +
                                  std::to_string(voter.vote.arity()) + " candidates, expected " +
                                  std::to_string(arity));
    }
    for (const CandidateId& c : voter.vote.chosen()) {
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
        throw std::invalid_argument(std::string(which) + " voter names unknown candidate " +
                                    c.name());
      }
    }
    if (voter.price < 0) {
      throw std::invalid_argument(std::string(which) + " voter has negative price");
    }
  }
}

void check_plan_indices(const std::vector<int>& indices, int bound, const char* which) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string("plan repeats a ") + which + " index");
  }
  for (int i : sorted) {
    if (i < 0 || i >= bound) {
      throw std::invalid_argument(std::string("plan ") + which + " index " + std::to_string(i) +
                                  " out of range");
    }
  }
}

}  // namespace

void validate(const CcrvInstance& instance) {
  check_candidates(instance.candidates, instance.preferred);
  if (instance.candidates.size() < 2) {
    throw std::invalid_argument("2-approval needs at least 2 candidates");
  }
  check_voters(instance.registered, instance.candidates, VoteKind::kApprove, 2, "registered");
  check_voters(instance.unregistered, instance.candidates, VoteKind::kApprove, 2, "unregistered");
  if (instance.limit < 0) throw std::invalid_argument("negative limit");
  if (!instance.priced && instance.limit > static_cast<long long>(instance.registered.size())) {
    throw std::invalid_argument("replacement limit exceeds the number of registered voters");
  }
}

void validate(const BriberyInstance& instance) {
  check_candidates(instance.candidates, instance.preferred);
  if (instance.rule.k < 1 || instance.rule.k > static_cast<int>(instance.candidates.size())) {
    throw std::invalid_argument("rule arity out of range");
  }
  VoteKind kind = instance.rule.kind == RuleKind::kApproval ? VoteKind::kApprove : VoteKind::kVeto;
  check_voters(instance.voters, instance.candidates, kind, instance.rule.k, "bribery");
  if (instance.budget < 0) throw std::invalid_argument("negative budget");
}

Election to_election(const BriberyInstance& instance) {
  return Election(instance.candidates, instance.voters, instance.rule);
}

Election apply_replacement(const CcrvInstance& instance, const ReplacementPlan& plan) {
  if (plan.removed.size() != plan.added.size()) {
    throw std::invalid_argument("replacement plan removes and adds different counts");
  }
  check_plan_indices(plan.removed, static_cast<int>(instance.registered.size()), "removed");
  check_plan_indices(plan.added, static_cast<int>(instance.unregistered.size()), "added");
  std::vector<char> gone(instance.registered.size(), 0);
  for (int i : plan.removed) gone[static_cast<size_t>(i)] = 1;
  std::vector<Voter> voters;
  for (size_t i = 0; i < instance.registered.size(); ++i) {
    if (!gone[i]) voters.push_back(instance.registered[i]);
  }
  for (int i : plan.added) voters.push_back(instance.unregistered[static_cast<size_t>(i)]);
  return Election(instance.candidates, std::move(voters), Rule{RuleKind::kApproval, 2});
}

Election apply_bribery(const Election& e, const BriberyPlan& plan) {
  if (plan.bribed.size() != plan.new_votes.size()) {
    throw std::invalid_argument("bribery plan bribes and revotes different counts");
  }
  check_plan_indices(plan.bribed, e.voter_count(), "bribed");
  std::vector<Voter> voters = e.voters();
  for (size_t i = 0; i < plan.bribed.size(); ++i) {
    voters[static_cast<size_t>(plan.bribed[i])].vote = plan.new_votes[i];
  }
  return Election(e.candidates(), std::move(voters), e.rule());
}

long long plan_cost(const CcrvInstance& instance, const ReplacementPlan& plan) {
  if (plan.removed.size() != plan.added.size()) {
    throw std::invalid_argument("replacement plan removes and adds different counts");
  }
  if (!instance.priced) return static_cast<long long>(plan.removed.size());
  long long cost = 0;
  for (int i : plan.removed) cost += instance.registered[static_cast<size_t>(i)].price;
  for (int i : plan.added) cost += instance.unregistered[static_cast<size_t>(i)].price;
  return cost;
}

long long plan_cost(const BriberyInstance& instance, const BriberyPlan& plan) {
  long long cost = 0;
  for (int i : plan.bribed) cost += instance.voters[static_cast<size_t>(i)].price;
  return cost;
}

}  // namespace votematch
