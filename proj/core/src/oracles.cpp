#include "votematch/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "votematch/caps.hpp"

namespace votematch {

namespace {

std::vector<int> mask_indices(std::uint32_t mask, int bound) {
  std::vector<int> out;
  for (int i = 0; i < bound; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

}  // namespace

AttackDecision brute_ccrv(const CcrvInstance& instance) {
  validate(instance);
  const int nv = static_cast<int>(instance.registered.size());
  const int nw = static_cast<int>(instance.unregistered.size());
  if (nv + nw > kBruteCcrvVoterCap) {
    throw CapExceeded("brute-force replacement control supports at most " +
                      std::to_string(kBruteCcrvVoterCap) + " voters, got " +
                      std::to_string(nv + nw));
  }
  AttackDecision decision;
  for (std::uint32_t rm = 0; rm < (1u << nv); ++rm) {
    ReplacementPlan plan;
    plan.removed = mask_indices(rm, nv);
    long long removed_price = 0;
    for (int i : plan.removed) removed_price += instance.registered[static_cast<size_t>(i)].price;
    if (!instance.priced && static_cast<long long>(plan.removed.size()) > instance.limit) continue;
    if (instance.priced && removed_price > instance.limit) continue;
    for (std::uint32_t ad = 0; ad < (1u << nw); ++ad) {
      plan.added = mask_indices(ad, nw);
      if (plan.added.size() != plan.removed.size()) continue;
      if (plan_cost(instance, plan) > instance.limit) continue;
      Election after = apply_replacement(instance, plan);
      if (!is_winner(after, instance.preferred)) continue;
      decision.yes = true;
      decision.objective = plan_cost(instance, plan);
      decision.target_score = scores(after).at(instance.preferred);
      decision.replacement = std::move(plan);
      return decision;
    }
  }
  return decision;
}

AttackDecision brute_bribery(const BriberyInstance& instance) {
  validate(instance);
  const int n = static_cast<int>(instance.voters.size());
  const int nc = static_cast<int>(instance.candidates.size());
  if (n > kBruteBriberyVoterCap) {
    throw CapExceeded("brute-force bribery supports at most " +
                      std::to_string(kBruteBriberyVoterCap) + " voters, got " + std::to_string(n));
  }
  if (nc > kBruteBriberyCandidateCap) {
    throw CapExceeded("brute-force bribery supports at most " +
                      std::to_string(kBruteBriberyCandidateCap) + " candidates, got " +
                      std::to_string(nc));
  }

  std::vector<CandidateId> sorted = instance.candidates;
  std::sort(sorted.begin(), sorted.end());
  const VoteKind kind =
      instance.rule.kind == RuleKind::kApproval ? VoteKind::kApprove : VoteKind::kVeto;
  // All possible chosen-sets under the rule, as candidate subsets of size k.
  std::vector<Vote> options;
  std::vector<CandidateId> pick;
  auto build_options = [&](auto&& self, size_t from, int left) -> void {
    if (left == 0) {
      options.emplace_back(kind, pick);
      return;
    }
    for (size_t i = from; i + static_cast<size_t>(left) <= sorted.size(); ++i) {
      pick.push_back(sorted[i]);
      self(self, i + 1, left - 1);
      pick.pop_back();
    }
  };
  build_options(build_options, 0, instance.rule.k);

  const Election original = to_election(instance);
  std::map<CandidateId, long long> tallies = chosen_counts(original);

  AttackDecision decision;
  // Outer: the bribed subset (price-pruned). Inner: which option each bribed
  // voter switches to. Only tallies matter, so the inner search walks vote
  // multisets with incremental tally updates instead of ordered assignments.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    long long cost = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) cost += instance.voters[static_cast<size_t>(i)].price;
    }
    if (cost > instance.budget) continue;
    std::vector<int> bribed = mask_indices(mask, n);
    for (int i : bribed) {
      for (const CandidateId& c : instance.voters[static_cast<size_t>(i)].vote.chosen()) {
        --tallies.at(c);
      }
    }

    std::vector<int> counts(options.size(), 0);  // how many bribed take each option
    auto wins_now = [&]() {
      // Approval winners maximize the tally; veto winners minimize it.
      long long best = tallies.at(sorted[0]);
      for (const auto& [c, t] : tallies) {
        if (instance.rule.kind == RuleKind::kApproval ? t > best : t < best) best = t;
      }
      return tallies.at(instance.preferred) == best;
    };
    auto assign = [&](auto&& self, size_t opt, int left) -> bool {
      if (left == 0) return wins_now();
      if (opt == options.size()) return false;
      for (int take = left; take >= 0; --take) {
        for (int r = 0; r < take; ++r) {
          for (const CandidateId& c : options[opt].chosen()) ++tallies.at(c);
        }
        counts[opt] = take;
        if (self(self, opt + 1, left - take)) return true;
        counts[opt] = 0;
        for (int r = 0; r < take; ++r) {
          for (const CandidateId& c : options[opt].chosen()) --tallies.at(c);
        }
      }
      return false;
    };
    if (assign(assign, 0, static_cast<int>(bribed.size()))) {
      BriberyPlan plan;
      plan.bribed = bribed;
      for (size_t opt = 0; opt < options.size(); ++opt) {
        for (int r = 0; r < counts[opt]; ++r) plan.new_votes.push_back(options[opt]);
      }
      Election after = apply_bribery(original, plan);
      if (!is_winner(after, instance.preferred)) {
        throw std::logic_error("bribery oracle witness fails re-scoring");
      }
      decision.yes = true;
      decision.objective = cost;
      decision.target_score = chosen_counts(after).at(instance.preferred);
      decision.bribery = std::move(plan);
      return decision;
    }

    for (int i : bribed) {
      for (const CandidateId& c : instance.voters[static_cast<size_t>(i)].vote.chosen()) {
        ++tallies.at(c);
      }
    }
  }
  return decision;
}

}  // namespace votematch
