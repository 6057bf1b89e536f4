#include "votematch/election.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace votematch {

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (std::isspace(c) || c == '#') return false;
  }
  return true;
}

}  // namespace

CandidateId::CandidateId(std::string name) : name_(std::move(name)) {
  if (!valid_token(name_)) {
    throw std::invalid_argument("candidate name must be a nonempty token without whitespace or '#': '" +
                                name_ + "'");
  }
}

Vote::Vote(VoteKind kind, std::vector<CandidateId> chosen)
    : kind_(kind), chosen_(std::move(chosen)) {
  if (chosen_.empty()) throw std::invalid_argument("vote must choose at least one candidate");
  auto sorted = chosen_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("vote chooses the same candidate twice");
  }
}

bool Vote::touches(const CandidateId& c) const {
  return std::find(chosen_.begin(), chosen_.end(), c) != chosen_.end();
}

Election::Election(std::vector<CandidateId> candidates, std::vector<Voter> voters, Rule rule)
    : candidates_(std::move(candidates)), voters_(std::move(voters)), rule_(rule) {
  if (candidates_.empty()) throw std::invalid_argument("election needs at least one candidate");
  std::sort(candidates_.begin(), candidates_.end());
  if (std::adjacent_find(candidates_.begin(), candidates_.end()) != candidates_.end()) {
    throw std::invalid_argument("duplicate candidate");
  }
  if (rule_.k < 1) throw std::invalid_argument("rule arity must be at least 1");
  if (rule_.k > static_cast<int>(candidates_.size())) {
    throw std::invalid_argument("rule arity exceeds the number of candidates");
  }
  VoteKind expected = rule_.kind == RuleKind::kApproval ? VoteKind::kApprove : VoteKind::kVeto;
  for (const Voter& voter : voters_) {
    if (voter.vote.kind() != expected) {
      throw std::invalid_argument("vote kind does not match the rule");
    }
    if (voter.vote.arity() != rule_.k) {
      throw std::invalid_argument("vote arity does not match the rule");
    }
    for (const CandidateId& c : voter.vote.chosen()) {
      if (candidate_index(c) < 0) {
        throw std::invalid_argument("vote refers to unknown candidate '" + c.name() + "'");
      }
    }
    if (voter.price < 0) throw std::invalid_argument("voter price must be nonnegative");
  }
}

int Election::candidate_index(const CandidateId& c) const {
  auto it = std::lower_bound(candidates_.begin(), candidates_.end(), c);
  if (it == candidates_.end() || !(*it == c)) return -1;
  return static_cast<int>(it - candidates_.begin());
}

ScoreProfile chosen_counts(const Election& e) {
  ScoreProfile counts;
  for (const CandidateId& c : e.candidates()) counts.emplace(c, 0);
  for (const Voter& voter : e.voters()) {
    for (const CandidateId& c : voter.vote.chosen()) counts[c] += 1;
  }
  return counts;
}

ScoreProfile scores(const Election& e) {
  ScoreProfile result = chosen_counts(e);
  if (e.rule().kind == RuleKind::kVeto) {
    long long n = e.voter_count();
    for (auto& [c, count] : result) count = n - count;
  }
  return result;
}

std::set<CandidateId> winners(const Election& e) {
  ScoreProfile profile = scores(e);
  long long best = 0;
  bool first = true;
  for (const auto& [c, s] : profile) {
    if (first || s > best) best = s;
    first = false;
  }
  std::set<CandidateId> result;
  for (const auto& [c, s] : profile) {
    if (s == best) result.insert(c);
  }
  return result;
}

bool is_winner(const Election& e, const CandidateId& c) {
  if (e.candidate_index(c) < 0) throw std::invalid_argument("unknown candidate '" + c.name() + "'");
  return winners(e).count(c) > 0;
}

std::vector<CandidateId> full_ranking(const Vote& vote,
                                      const std::vector<CandidateId>& candidates) {
  std::vector<CandidateId> rest;
  for (const CandidateId& c : candidates) {
    if (!vote.touches(c)) rest.push_back(c);
  }
  if (rest.size() + vote.chosen().size() != candidates.size()) {
    throw std::invalid_argument("vote chooses candidates outside the election");
  }
  std::sort(rest.begin(), rest.end());
  std::vector<CandidateId> ranking;
  ranking.reserve(candidates.size());
  if (vote.kind() == VoteKind::kApprove) {
    ranking = vote.chosen();
    ranking.insert(ranking.end(), rest.begin(), rest.end());
  } else {
    ranking = rest;
    ranking.insert(ranking.end(), vote.chosen().begin(), vote.chosen().end());
  }
  return ranking;
}

}  // namespace votematch
