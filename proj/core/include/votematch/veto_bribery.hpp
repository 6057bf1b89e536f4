#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "votematch/attack.hpp"
#include "votematch/bmatching.hpp"

// Priced 2-veto bribery via minimum-weight perfect b-matching, the exact
// 3-veto bribery reference solver, and the restricted exact cover (RX3C)
// machinery that feeds its hardness-facing tests.

namespace votematch {

// One subproblem of 2-veto bribery: bribe exactly `vetoing_p` voters who veto
// the preferred candidate and `other` voters who do not.
struct VetoSplit {
  int vetoing_p = 0;
  int other = 0;

  int total() const { return vetoing_p + other; }
  bool operator==(const VetoSplit&) const = default;
};

struct VetoGraphMeta {
  VetoSplit split;
  long long final_p_vetoes = 0;  // preferred candidate's veto count afterwards
  int voter_edge_count = 0;      // voter edge ids: [0, voter_edge_count)
  int bribe_edge_first = 0;
  std::vector<int> bribe_edge_candidate;  // per bribe edge, candidate index
};

struct VetoGraph {
  PerfectBMatchingProblem problem;  // sense: minimize
  VetoGraphMeta meta;
};

// A split can be structurally impossible (some demand would go negative);
// such subproblems are skipped, not errors.
struct VetoGraphSkip {
  std::string reason;
};

// Requires |C| >= 3; vertices are x, y, then candidates in sorted order.
std::variant<VetoGraph, VetoGraphSkip> build_2veto_graph(const BriberyInstance& instance,
                                                         VetoSplit split);

// Turn per-candidate new-veto demands into `count` concrete votes of the
// given arity, never vetoing the preferred candidate: each round vetoes the
// `arity` candidates with the largest remaining demand (ties by name). Total
// demand must be arity*count with every entry in [0, count].
std::vector<Vote> realize_bribed_votes(const std::map<CandidateId, long long>& demand,
                                       long long count, int arity,
                                       const CandidateId& preferred,
                                       const std::vector<CandidateId>& candidates);

// Tries splits with `vetoing_p` descending and `other` ascending; the first
// subproblem whose minimum matching weight fits the budget wins.
AttackDecision solve_bribery_2veto(const BriberyInstance& instance);

// Exact reference solver: enumerates bribed subsets within budget (pruned on
// price) and checks the induced veto-demand system. Throws CapExceeded above
// kExact3VetoVoterCap voters.
AttackDecision solve_bribery_3veto_exact(const BriberyInstance& instance);

// Restricted exact cover by 3-sets: every element occurs in exactly 3 of the
// 3k sets; asked whether k disjoint sets cover all 3k elements.
struct Rx3cInstance {
  std::vector<std::string> elements;
  std::vector<std::array<std::string, 3>> sets;
};

void validate(const Rx3cInstance& instance);

// Chosen set indices of an exact cover, or nullopt. Throws CapExceeded above
// kBruteRx3cSetCap sets.
std::optional<std::vector<int>> solve_rx3c_brute(const Rx3cInstance& instance);

// Hardness reduction to 3-veto bribery with budget k: per-set voters at price
// 1, plus guard voters (two vetoing p, p1, p2 and k vetoing dummy triples) too
// expensive to bribe.
BriberyInstance reduce_rx3c_to_3veto(const Rx3cInstance& instance);

// Deterministic random instance: the union of three independently shuffled
// partitions of {e1..e3k} into triples.
Rx3cInstance gen_rx3c(int k, unsigned long long seed);

}  // namespace votematch
