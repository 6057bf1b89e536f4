#include "votematch/veto_bribery.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "votematch/caps.hpp"

namespace votematch {

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  }
  return true;
}

std::vector<CandidateId> sorted_candidates(const std::vector<CandidateId>& candidates) {
  std::vector<CandidateId> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::map<CandidateId, long long> veto_counts(const BriberyInstance& instance) {
  std::map<CandidateId, long long> counts;
  for (const CandidateId& c : instance.candidates) counts.emplace(c, 0);
  for (const Voter& voter : instance.voters) {
    for (const CandidateId& c : voter.vote.chosen()) ++counts.at(c);
  }
  return counts;
}

AttackDecision trivial_yes(long long p_vetoes) {
  AttackDecision decision;
  decision.yes = true;
  decision.objective = 0;
  decision.bribery = BriberyPlan{};
  decision.target_score = p_vetoes;
  return decision;
}

// Re-run the bribed election and insist the witness does what the matching
// said it would.
void check_bribery_witness(const BriberyInstance& instance, const BriberyPlan& plan,
                           long long final_p_vetoes, long long claimed_cost) {
  if (plan_cost(instance, plan) != claimed_cost) {
    throw std::logic_error("bribery witness cost does not match the matching weight");
  }
  if (claimed_cost > instance.budget) {
    throw std::logic_error("bribery witness exceeds the budget");
  }
  Election after = apply_bribery(to_election(instance), plan);
  if (!is_winner(after, instance.preferred)) {
    throw std::logic_error("bribery witness fails re-scoring: preferred does not win");
  }
  if (chosen_counts(after).at(instance.preferred) != final_p_vetoes) {
    throw std::logic_error("bribery witness fails re-scoring: wrong preferred veto count");
  }
}

}  // namespace

std::variant<VetoGraph, VetoGraphSkip> build_2veto_graph(const BriberyInstance& instance,
                                                         VetoSplit split) {
  if (instance.candidates.size() < 3) {
    throw std::invalid_argument("the 2-veto graph needs at least 3 candidates");
  }
  const std::vector<CandidateId> candidates = sorted_candidates(instance.candidates);
  const std::map<CandidateId, long long> vetoes = veto_counts(instance);
  const long long n = static_cast<long long>(instance.voters.size());
  const long long vp = vetoes.at(instance.preferred);
  if (split.vetoing_p < 0 || split.vetoing_p > vp) {
    return VetoGraphSkip{"vetoing_p outside 0..v_p"};
  }
  if (split.other < 0 || split.other > n - vp) {
    return VetoGraphSkip{"other outside 0..|V'_p|"};
  }
  const long long t = split.total();
  const long long fv = vp - split.vetoing_p;

  VetoGraph graph;
  graph.problem.sense = Sense::kMinimize;
  graph.meta.split = split;
  graph.meta.final_p_vetoes = fv;
  graph.meta.voter_edge_count = static_cast<int>(n);
  graph.meta.bribe_edge_first = static_cast<int>(n);

  Multigraph& g = graph.problem.graph;
  const VertexId x = g.add_vertex("x");
  const VertexId y = g.add_vertex("y");
  std::vector<VertexId> cv(candidates.size());
  std::vector<long long> demand_c(candidates.size(), 0);
  long long sum_nonp = 0;
  for (size_t i = 0; i < candidates.size(); ++i) {
    cv[i] = g.add_vertex(candidates[i].name());
    if (candidates[i] == instance.preferred) {
      demand_c[i] = split.vetoing_p;
    } else {
      demand_c[i] = vetoes.at(candidates[i]) + t - fv;
      if (demand_c[i] < 0) {
        return VetoGraphSkip{"b(" + candidates[i].name() + ") negative"};
      }
      sum_nonp += demand_c[i];
    }
  }
  const long long by = (static_cast<long long>(candidates.size()) - 3) * t;
  const long long bx = sum_nonp - split.vetoing_p - 2 * split.other - by;
  if (bx < 0) return VetoGraphSkip{"b(x) negative"};

  auto vertex_of = [&](const CandidateId& c) {
    return cv[static_cast<size_t>(
        std::lower_bound(candidates.begin(), candidates.end(), c) - candidates.begin())];
  };
  for (const Voter& voter : instance.voters) {
    g.add_edge(vertex_of(voter.vote.chosen()[0]), vertex_of(voter.vote.chosen()[1]), voter.price,
               "voter");
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == instance.preferred) continue;
    for (long long j = 0; j < t; ++j) {
      g.add_edge(cv[i], y, 0, "bribe");
      graph.meta.bribe_edge_candidate.push_back(static_cast<int>(i));
    }
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == instance.preferred) continue;
    for (long long j = 0; j < demand_c[i]; ++j) {
      g.add_edge(cv[i], x, 0, "padding");
    }
  }

  graph.problem.demand.assign(static_cast<size_t>(g.vertex_count()), 0);
  graph.problem.demand[static_cast<size_t>(x)] = static_cast<int>(bx);
  graph.problem.demand[static_cast<size_t>(y)] = static_cast<int>(by);
  for (size_t i = 0; i < candidates.size(); ++i) {
    graph.problem.demand[static_cast<size_t>(cv[i])] = static_cast<int>(demand_c[i]);
  }
  return graph;
}

std::vector<Vote> realize_bribed_votes(const std::map<CandidateId, long long>& demand,
                                       long long count, int arity, const CandidateId& preferred,
                                       const std::vector<CandidateId>& candidates) {
  long long total = 0;
  for (const auto& [c, d] : demand) {
    if (d < 0 || d > count) throw std::logic_error("bribed-vote demand entry out of range");
    if (d > 0 && c == preferred) {
      throw std::logic_error("bribed-vote demand targets the preferred candidate");
    }
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
      throw std::logic_error("bribed-vote demand names an unknown candidate");
    }
    total += d;
  }
  if (total != static_cast<long long>(arity) * count) {
    throw std::logic_error("bribed-vote demand does not sum to arity*count");
  }

  std::vector<std::pair<long long, CandidateId>> remaining;
  for (const auto& [c, d] : demand) {
    if (d > 0) remaining.emplace_back(d, c);
  }
  std::vector<Vote> votes;
  for (long long round = 0; round < count; ++round) {
    // Largest remaining demands first; the usual exchange argument shows this
    // never strands demand (after each round, max remaining <= rounds left).
    std::sort(remaining.begin(), remaining.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    if (static_cast<int>(remaining.size()) < arity) {
      throw std::logic_error("bribed-vote demand spreads over too few candidates");
    }
    std::vector<CandidateId> chosen;
    for (int i = 0; i < arity; ++i) {
      chosen.push_back(remaining[static_cast<size_t>(i)].second);
      --remaining[static_cast<size_t>(i)].first;
    }
    std::sort(chosen.begin(), chosen.end());
    votes.emplace_back(VoteKind::kVeto, std::move(chosen));
    remaining.erase(
        std::remove_if(remaining.begin(), remaining.end(), [](const auto& r) { return r.first == 0; }),
        remaining.end());
  }
  if (!remaining.empty()) throw std::logic_error("bribed-vote demand left unrealized");
  return votes;
}

AttackDecision solve_bribery_2veto(const BriberyInstance& instance) {
  validate(instance);
  if (instance.rule.kind != RuleKind::kVeto || instance.rule.k != 2) {
    throw std::invalid_argument("this solver handles the 2-veto rule only");
  }
  const std::map<CandidateId, long long> vetoes = veto_counts(instance);
  const long long vp = vetoes.at(instance.preferred);
  if (instance.candidates.size() <= 2) {
    // Two candidates: every ballot vetoes both, so everyone ties.
    return trivial_yes(vp);
  }
  const long long n = static_cast<long long>(instance.voters.size());
  AttackDecision decision;
  for (long long lp = vp; lp >= 0; --lp) {
    for (long long lo = 0; lo <= n - vp; ++lo) {
      auto built = build_2veto_graph(instance, VetoSplit{static_cast<int>(lp),
                                                         static_cast<int>(lo)});
      if (std::holds_alternative<VetoGraphSkip>(built)) continue;
      VetoGraph& graph = std::get<VetoGraph>(built);
      SolveOutcome outcome = solve(graph.problem);
      if (!outcome.feasible() || outcome.solution->total_weight > instance.budget) continue;

      const VetoGraphMeta& meta = graph.meta;
      const long long t = meta.split.total();
      BriberyPlan plan;
      std::vector<long long> picked_bribes(instance.candidates.size(), 0);
      for (EdgeId id : outcome.solution->selected) {
        if (id < meta.voter_edge_count) {
          plan.bribed.push_back(id);
        } else if (id - meta.bribe_edge_first <
                   static_cast<int>(meta.bribe_edge_candidate.size())) {
          ++picked_bribes[static_cast<size_t>(
              meta.bribe_edge_candidate[static_cast<size_t>(id - meta.bribe_edge_first)])];
        }
      }
      if (static_cast<long long>(plan.bribed.size()) != t) {
        throw std::logic_error("2-veto matching selected a wrong number of voter edges");
      }
      const std::vector<CandidateId> candidates = sorted_candidates(instance.candidates);
      std::map<CandidateId, long long> bv;
      long long bv_total = 0;
      for (size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i] == instance.preferred) continue;
        bv[candidates[i]] = t - picked_bribes[i];
        bv_total += t - picked_bribes[i];
      }
      if (bv_total != 2 * t) {
        throw std::logic_error("2-veto matching distributes a wrong number of new vetoes");
      }
      plan.new_votes = realize_bribed_votes(bv, t, 2, instance.preferred, instance.candidates);
      check_bribery_witness(instance, plan, meta.final_p_vetoes, outcome.solution->total_weight);

      decision.yes = true;
      decision.objective = outcome.solution->total_weight;
      decision.bribery = std::move(plan);
      decision.target_score = meta.final_p_vetoes;
      decision.bribe_split = std::pair<int, int>{meta.split.vetoing_p, meta.split.other};
      return decision;
    }
  }
  return decision;
}

AttackDecision solve_bribery_3veto_exact(const BriberyInstance& instance) {
  validate(instance);
  if (instance.rule.kind != RuleKind::kVeto || instance.rule.k != 3) {
    throw std::invalid_argument("this solver handles the 3-veto rule only");
  }
  const std::map<CandidateId, long long> vetoes = veto_counts(instance);
  const long long vp = vetoes.at(instance.preferred);
  if (instance.candidates.size() <= 3) {
    // Three candidates: every ballot vetoes all of them, so everyone ties.
    return trivial_yes(vp);
  }
  const int n = static_cast<int>(instance.voters.size());
  if (n > kExact3VetoVoterCap) {
    throw CapExceeded("exact 3-veto bribery supports at most " +
                      std::to_string(kExact3VetoVoterCap) + " voters, got " + std::to_string(n));
  }

  const std::vector<CandidateId> candidates = sorted_candidates(instance.candidates);
  std::vector<long long> base(candidates.size(), 0);
  for (size_t i = 0; i < candidates.size(); ++i) base[i] = vetoes.at(candidates[i]);
  const size_t pidx = static_cast<size_t>(
      std::lower_bound(candidates.begin(), candidates.end(), instance.preferred) -
      candidates.begin());
  // Per voter, the vetoed candidates as indices into the sorted order.
  std::vector<std::vector<size_t>> vetoed(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (const CandidateId& c : instance.voters[static_cast<size_t>(i)].vote.chosen()) {
      vetoed[static_cast<size_t>(i)].push_back(static_cast<size_t>(
          std::lower_bound(candidates.begin(), candidates.end(), c) - candidates.begin()));
    }
  }

  std::vector<long long> taken(candidates.size(), 0);  // vetoes removed by bribing
  std::vector<int> bribed;
  AttackDecision decision;

  // Depth-first over bribed subsets, cheapest-prefix pruning on price; at a
  // leaf the bribed votes are free to redistribute 3t vetoes, so feasibility
  // is a closed-form check on per-candidate deficits.
  auto evaluate = [&]() -> bool {
    const long long t = static_cast<long long>(bribed.size());
    const long long f = vp - taken[pidx];
    std::map<CandidateId, long long> demand;
    long long total = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (i == pidx) continue;
      long long d = std::max<long long>(0, f - (base[i] - taken[i]));
      if (d > t) return false;
      demand[candidates[i]] = d;
      total += d;
    }
    if (total > 3 * t) return false;
    // Top the demands up to exactly 3t, never past t per candidate.
    long long extra = 3 * t - total;
    for (size_t i = 0; i < candidates.size() && extra > 0; ++i) {
      if (i == pidx) continue;
      long long room = t - demand[candidates[i]];
      long long add = std::min(room, extra);
      demand[candidates[i]] += add;
      extra -= add;
    }
    if (extra > 0) return false;  // cannot happen with |C| >= 4, kept as a guard

    BriberyPlan plan;
    plan.bribed = bribed;
    plan.new_votes = realize_bribed_votes(demand, t, 3, instance.preferred, instance.candidates);
    long long cost = 0;
    for (int i : bribed) cost += instance.voters[static_cast<size_t>(i)].price;
    check_bribery_witness(instance, plan, f, cost);

    decision.yes = true;
    decision.objective = cost;
    decision.bribery = std::move(plan);
    decision.target_score = f;
    return true;
  };

  long long spent = 0;
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == n) return evaluate();
    if (self(self, i + 1)) return true;
    const Voter& voter = instance.voters[static_cast<size_t>(i)];
    if (spent + voter.price > instance.budget) return false;
    spent += voter.price;
    bribed.push_back(i);
    for (size_t c : vetoed[static_cast<size_t>(i)]) ++taken[c];
    bool found = self(self, i + 1);
    for (size_t c : vetoed[static_cast<size_t>(i)]) --taken[c];
    bribed.pop_back();
    spent -= voter.price;
    return found;
  };
  dfs(dfs, 0);
  return decision;
}

void validate(const Rx3cInstance& instance) {
  if (instance.elements.size() % 3 != 0) {
    throw std::invalid_argument("element count must be a multiple of 3");
  }
  if (instance.sets.size() != instance.elements.size()) {
    throw std::invalid_argument("need exactly as many sets as elements");
  }
  std::map<std::string, int> occurrences;
  for (const std::string& e : instance.elements) {
    if (!valid_token(e)) throw std::invalid_argument("bad element name: '" + e + "'");
    if (!occurrences.emplace(e, 0).second) {
      throw std::invalid_argument("duplicate element " + e);
    }
  }
  for (const auto& s : instance.sets) {
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      throw std::invalid_argument("set members must be distinct");
    }
    for (const std::string& e : s) {
      auto it = occurrences.find(e);
      if (it == occurrences.end()) throw std::invalid_argument("set uses unknown element " + e);
      ++it->second;
    }
  }
  for (const auto& [e, count] : occurrences) {
    if (count != 3) {
      throw std::invalid_argument("element " + e + " occurs in " + std::to_string(count) +
                                  " sets, expected 3");
    }
  }
}

std::optional<std::vector<int>> solve_rx3c_brute(const Rx3cInstance& instance) {
  validate(instance);
  const int nsets = static_cast<int>(instance.sets.size());
  if (nsets > kBruteRx3cSetCap) {
    throw CapExceeded("brute-force exact cover supports at most " +
                      std::to_string(kBruteRx3cSetCap) + " sets, got " + std::to_string(nsets));
  }
  std::map<std::string, int> index;
  for (size_t i = 0; i < instance.elements.size(); ++i) {
    index.emplace(instance.elements[i], static_cast<int>(i));
  }
  std::vector<std::uint32_t> masks(static_cast<size_t>(nsets), 0);
  for (int s = 0; s < nsets; ++s) {
    for (const std::string& e : instance.sets[static_cast<size_t>(s)]) {
      masks[static_cast<size_t>(s)] |= 1u << index.at(e);
    }
  }
  const std::uint32_t full =
      instance.elements.empty() ? 0 : (instance.elements.size() == 32
                                           ? ~0u
                                           : (1u << instance.elements.size()) - 1);
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, std::uint32_t covered) -> bool {
    if (covered == full) return true;
    int first = -1;
    for (size_t i = 0; i < instance.elements.size(); ++i) {
      if (!(covered & (1u << i))) {
        first = static_cast<int>(i);
        break;
      }
    }
    for (int s = 0; s < nsets; ++s) {
      if (!(masks[static_cast<size_t>(s)] & (1u << first))) continue;
      if (masks[static_cast<size_t>(s)] & covered) continue;
      chosen.push_back(s);
      if (self(self, covered | masks[static_cast<size_t>(s)])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return chosen;
}

BriberyInstance reduce_rx3c_to_3veto(const Rx3cInstance& instance) {
  validate(instance);
  const long long k = static_cast<long long>(instance.elements.size()) / 3;

  BriberyInstance out{{}, {}, CandidateId("p"), k, Rule{RuleKind::kVeto, 3}};

  std::vector<std::string> extra = {"p", "p1", "p2"};
  for (long long i = 1; i <= 3 * k; ++i) extra.push_back("d" + std::to_string(i));
  for (const std::string& name : extra) {
    if (std::find(instance.elements.begin(), instance.elements.end(), name) !=
        instance.elements.end()) {
      throw std::invalid_argument("element name " + name + " collides with a reduction candidate");
    }
    out.candidates.emplace_back(name);
  }
  for (const std::string& e : instance.elements) out.candidates.emplace_back(e);

  for (const auto& s : instance.sets) {
    out.voters.push_back(
        Voter{Vote(VoteKind::kVeto, {CandidateId(s[0]), CandidateId(s[1]), CandidateId(s[2])}), 1});
  }
  Vote guard(VoteKind::kVeto, {CandidateId("p1"), CandidateId("p2"), CandidateId("p")});
  out.voters.push_back(Voter{guard, k + 1});
  out.voters.push_back(Voter{guard, k + 1});
  for (long long j = 1; j <= k; ++j) {
    out.voters.push_back(Voter{Vote(VoteKind::kVeto, {CandidateId("d" + std::to_string(3 * j - 2)),
                                                      CandidateId("d" + std::to_string(3 * j - 1)),
                                                      CandidateId("d" + std::to_string(3 * j))}),
                               k + 1});
  }
  validate(out);
  return out;
}

Rx3cInstance gen_rx3c(int k, unsigned long long seed) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  Rx3cInstance out;
  const int m = 3 * k;
  for (int i = 1; i <= m; ++i) out.elements.push_back("e" + std::to_string(i));

  // Fisher-Yates with modulo draws: biased in theory, deterministic across
  // platforms in practice, which is what a fixture generator needs.
  std::mt19937_64 rng(seed);
  for (int part = 0; part < 3; ++part) {
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = m - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<unsigned long long>(i + 1));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    for (int s = 0; s < k; ++s) {
      out.sets.push_back({out.elements[static_cast<size_t>(perm[static_cast<size_t>(3 * s)])],
                          out.elements[static_cast<size_t>(perm[static_cast<size_t>(3 * s + 1)])],
                          out.elements[static_cast<size_t>(perm[static_cast<size_t>(3 * s + 2)])]});
    }
  }
  validate(out);
  return out;
}

}  // namespace votematch
