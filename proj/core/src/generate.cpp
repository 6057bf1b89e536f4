#include "votematch/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace votematch {

namespace {

// All draws go through the raw engine with a modulus so that a seed produces
// the same instance on every platform (distribution objects do not promise
// that).
long long draw(std::mt19937_64& rng, long long bound_inclusive) {
  return static_cast<long long>(rng() % static_cast<unsigned long long>(bound_inclusive + 1));
}

Vote draw_vote(std::mt19937_64& rng, const std::vector<CandidateId>& candidates,
               const Rule& rule) {
  std::vector<size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), size_t{0});
  for (int i = 0; i < rule.k; ++i) {
    size_t j = static_cast<size_t>(i) +
               static_cast<size_t>(rng() % (order.size() - static_cast<size_t>(i)));
    std::swap(order[static_cast<size_t>(i)], order[j]);
  }
  std::vector<CandidateId> chosen;
  for (int i = 0; i < rule.k; ++i) chosen.push_back(candidates[order[static_cast<size_t>(i)]]);
  std::sort(chosen.begin(), chosen.end());
  const VoteKind kind =
      rule.kind == RuleKind::kApproval ? VoteKind::kApprove : VoteKind::kVeto;
  return Vote(kind, std::move(chosen));
}

std::vector<Voter> draw_voters(std::mt19937_64& rng, int count,
                               const std::vector<CandidateId>& candidates, const Rule& rule,
                               bool priced, long long max_price) {
  std::vector<Voter> voters;
  voters.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    Vote vote = draw_vote(rng, candidates, rule);
    long long price = priced ? draw(rng, max_price) : 1;
    voters.push_back(Voter{std::move(vote), price});
  }
  return voters;
}

}  // namespace

ProblemFile gen_election(const GenElectionOptions& options) {
  if (options.kind != ProblemKind::kBribery && options.rule != Rule{RuleKind::kApproval, 2}) {
    throw std::invalid_argument("replacement control requires the 2approval rule");
  }
  if (options.rule.k < 1) throw std::invalid_argument("the rule must choose at least one candidate");
  if (options.candidates < 2 || options.candidates < options.rule.k) {
    throw std::invalid_argument("need at least two candidates and at least as many as the rule chooses");
  }
  if (options.voters < 0 || options.unregistered < 0) {
    throw std::invalid_argument("voter counts must be nonnegative");
  }
  if (options.max_price < 0 || options.max_budget < 0) {
    throw std::invalid_argument("max price and max budget must be nonnegative");
  }

  std::mt19937_64 rng(options.seed);
  ProblemFile file;
  file.name = "random" + std::to_string(options.seed);
  file.kind = options.kind;
  file.rule = options.rule;
  file.preferred = CandidateId("p");
  file.candidates.push_back(file.preferred);
  for (int i = 1; i < options.candidates; ++i) {
    file.candidates.emplace_back("c" + std::to_string(i));
  }

  const bool priced = options.kind != ProblemKind::kCcrv;
  file.registered =
      draw_voters(rng, options.voters, file.candidates, file.rule, priced, options.max_price);
  if (options.kind != ProblemKind::kBribery) {
    file.unregistered = draw_voters(rng, options.unregistered, file.candidates, file.rule,
                                    priced, options.max_price);
  }

  if (options.limit >= 0) {
    file.limit = options.limit;
  } else if (options.kind == ProblemKind::kCcrv) {
    file.limit = draw(rng, options.voters);
  } else {
    file.limit = draw(rng, options.max_budget);
  }
  if (options.kind == ProblemKind::kCcrv && file.limit > options.voters) {
    file.limit = options.voters;
  }

  // Exercise the instance invariants before handing the file out.
  if (options.kind == ProblemKind::kBribery) {
    to_bribery_instance(file);
  } else {
    to_ccrv_instance(file);
  }
  return file;
}

}  // namespace votematch
