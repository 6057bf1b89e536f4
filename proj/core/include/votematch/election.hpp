#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

// Elections under k-approval / k-veto rules, with votes kept in abbreviated
// form: only the approved (top-k) or vetoed (bottom-k) set is stored, since
// scores under these rules depend on nothing else.

namespace votematch {

// A candidate name: a nonempty token with no whitespace and no '#', so it can
// round-trip through the line-oriented file formats. Ordered by byte value.
class CandidateId {
 public:
  explicit CandidateId(std::string name);

  const std::string& name() const { return name_; }

  bool operator==(const CandidateId& other) const { return name_ == other.name_; }
  std::strong_ordering operator<=>(const CandidateId& other) const {
    return name_.compare(other.name_) <=> 0;
  }

 private:
  std::string name_;
};

enum class VoteKind { kApprove, kVeto };

// chosen() holds exactly the approved/vetoed candidates, all distinct.
class Vote {
 public:
  Vote(VoteKind kind, std::vector<CandidateId> chosen);

  VoteKind kind() const { return kind_; }
  const std::vector<CandidateId>& chosen() const { return chosen_; }
  int arity() const { return static_cast<int>(chosen_.size()); }
  bool touches(const CandidateId& c) const;

  bool operator==(const Vote&) const = default;

 private:
  VoteKind kind_;
  std::vector<CandidateId> chosen_;
};

struct Voter {
  Vote vote;
  long long price = 1;  // >= 0; price 0 is legal

  bool operator==(const Voter&) const = default;
};

enum class RuleKind { kApproval, kVeto };

struct Rule {
  RuleKind kind = RuleKind::kApproval;
  int k = 2;

  bool operator==(const Rule&) const = default;
};

// Validated at construction: candidates unique and nonempty, 1 <= k <= |C|,
// every vote has the rule's kind and arity and refers to known candidates,
// prices nonnegative. Candidates are kept sorted.
class Election {
 public:
  Election(std::vector<CandidateId> candidates, std::vector<Voter> voters, Rule rule);

  const std::vector<CandidateId>& candidates() const { return candidates_; }
  const std::vector<Voter>& voters() const { return voters_; }
  const Rule& rule() const { return rule_; }
  int voter_count() const { return static_cast<int>(voters_.size()); }

  // Index into candidates(), or -1 if unknown.
  int candidate_index(const CandidateId& c) const;

 private:
  std::vector<CandidateId> candidates_;
  std::vector<Voter> voters_;
  Rule rule_;
};

using ScoreProfile = std::map<CandidateId, long long>;

// Number of votes whose chosen set contains the candidate (approval count
// under approval rules, veto count under veto rules).
ScoreProfile chosen_counts(const Election& e);

// Points per candidate: approval scores equal the chosen count, veto scores
// equal (number of voters) - (veto count).
ScoreProfile scores(const Election& e);

// Nonunique-winner model: every candidate with maximum score wins.
std::set<CandidateId> winners(const Election& e);
bool is_winner(const Election& e, const CandidateId& c);

// A concrete linear order consistent with an abbreviated vote: the chosen
// candidates occupy the top (approve) or bottom (veto) positions, everyone
// else is filled in lexicographically.
std::vector<CandidateId> full_ranking(const Vote& vote,
                                      const std::vector<CandidateId>& candidates);

}  // namespace votematch
