#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <variant>

#include "test_util.hpp"
#include "votematch/caps.hpp"
#include "votematch/io.hpp"
#include "votematch/veto_bribery.hpp"

using namespace votematch;

namespace {

CandidateId cid(const char* name) { return CandidateId(name); }

Voter veto2(const char* a, const char* b, long long price = 1) {
  return Voter{Vote(VoteKind::kVeto, {cid(a), cid(b)}), price};
}

Voter veto3(const char* a, const char* b, const char* c, long long price = 1) {
  return Voter{Vote(VoteKind::kVeto, {cid(a), cid(b), cid(c)}), price};
}

BriberyInstance example_bribery_instance() {
  return to_bribery_instance(parse_problem(testutil::slurp(testutil::fixture_path("ex2.election"))));
}

std::string skip_reason(const BriberyInstance& instance, VetoSplit split) {
  auto built = build_2veto_graph(instance, split);
  REQUIRE(std::holds_alternative<VetoGraphSkip>(built));
  return std::get<VetoGraphSkip>(built).reason;
}

// The RX3C family with no exact cover: elements 1..6, every element in
// exactly three sets, but no two disjoint sets cover everything.
Rx3cInstance uncoverable_rx3c() {
  return Rx3cInstance{{"1", "2", "3", "4", "5", "6"},
                      {{"1", "2", "3"},
                       {"1", "2", "4"},
                       {"3", "4", "5"},
                       {"3", "4", "6"},
                       {"1", "5", "6"},
                       {"2", "5", "6"}}};
}

}  // namespace

TEST_CASE("the 2-veto bribery example solves at cost 3 with split (2,1)") {
  BriberyInstance instance = example_bribery_instance();
  AttackDecision decision = solve_bribery_2veto(instance);
  CHECK(decision.yes);
  CHECK(decision.objective == 3);
  REQUIRE(decision.bribe_split.has_value());
  CHECK(*decision.bribe_split == std::pair<int, int>{2, 1});
  CHECK(decision.target_score == 4);  // p keeps 4 of its 6 vetoes

  REQUIRE(decision.bribery.has_value());
  CHECK(decision.bribery->bribed.size() == 3);
  CHECK(plan_cost(instance, *decision.bribery) == 3);
  Election after = apply_bribery(to_election(instance), *decision.bribery);
  CHECK(is_winner(after, instance.preferred));
  CHECK(chosen_counts(after).at(instance.preferred) == 4);
}

TEST_CASE("the example's graph at split (2,1) carries the published demands") {
  BriberyInstance instance = example_bribery_instance();
  auto built = build_2veto_graph(instance, VetoSplit{2, 1});
  REQUIRE(std::holds_alternative<VetoGraph>(built));
  const VetoGraph& graph = std::get<VetoGraph>(built);

  CHECK(graph.problem.sense == Sense::kMinimize);
  CHECK(graph.meta.split == VetoSplit{2, 1});
  CHECK(graph.meta.final_p_vetoes == 4);
  CHECK(graph.meta.voter_edge_count == 9);
  CHECK(graph.meta.bribe_edge_first == 9);
  // Three bribe copies per non-preferred candidate, in sorted order a, b, c.
  CHECK(graph.meta.bribe_edge_candidate ==
        std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2, 2});

  const Multigraph& g = graph.problem.graph;
  REQUIRE(g.vertex_count() == 6);  // x, y, a, b, c, p
  CHECK(g.vertex_names() == std::vector<std::string>{"x", "y", "a", "b", "c", "p"});
  CHECK(graph.problem.demand == std::vector<int>{2, 3, 0, 4, 5, 2});
  // 9 voter edges + 9 bribe edges + (0 + 4 + 5) padding edges.
  CHECK(g.edge_count() == 27);

  SolveOutcome outcome = solve(graph.problem);
  REQUIRE(outcome.feasible());
  CHECK(outcome.solution->total_weight == 3);
}

TEST_CASE("structurally impossible splits are skipped with a stated reason") {
  BriberyInstance instance = example_bribery_instance();
  CHECK(skip_reason(instance, VetoSplit{7, 0}) == "vetoing_p outside 0..v_p");
  CHECK(skip_reason(instance, VetoSplit{0, 4}) == "other outside 0..|V'_p|");
  // Leaving all 6 vetoes on p forces b(a) = 1 + 0 - 6 < 0.
  CHECK(skip_reason(instance, VetoSplit{0, 0}) == "b(a) negative");
  // fv = 5, t = 4: all candidate demands work out, but the slack goes to -2.
  CHECK(skip_reason(instance, VetoSplit{1, 3}) == "b(x) negative");
}

TEST_CASE("the 2-veto graph needs at least three candidates") {
  BriberyInstance instance{{cid("p"), cid("q")},
                           {veto2("p", "q")},
                           cid("p"),
                           0,
                           Rule{RuleKind::kVeto, 2}};
  CHECK_THROWS_AS(build_2veto_graph(instance, VetoSplit{0, 0}), std::invalid_argument);
  // The solver itself short-circuits: two candidates always tie.
  AttackDecision decision = solve_bribery_2veto(instance);
  CHECK(decision.yes);
  CHECK(decision.objective == 0);
  REQUIRE(decision.bribery.has_value());
  CHECK(decision.bribery->bribed.empty());
  CHECK(decision.target_score == 1);
}

TEST_CASE("the 2-veto solver rejects other rules") {
  BriberyInstance instance{{cid("p"), cid("a"), cid("b"), cid("c")},
                           {veto3("a", "b", "c")},
                           cid("p"),
                           0,
                           Rule{RuleKind::kVeto, 3}};
  CHECK_THROWS_AS(solve_bribery_2veto(instance), std::invalid_argument);
  CHECK_THROWS_AS(solve_bribery_3veto_exact(example_bribery_instance()), std::invalid_argument);
}

TEST_CASE("bribed votes are realized greedily from per-candidate demands") {
  std::vector<CandidateId> candidates{cid("p"), cid("a"), cid("b"), cid("c")};

  SUBCASE("uniform demand gives identical votes") {
    std::vector<Vote> votes =
        realize_bribed_votes({{cid("a"), 3}, {cid("b"), 3}}, 3, 2, cid("p"), candidates);
    REQUIRE(votes.size() == 3);
    for (const Vote& v : votes) {
      CHECK(v.kind() == VoteKind::kVeto);
      CHECK(v.chosen() == std::vector<CandidateId>{cid("a"), cid("b")});
    }
  }

  SUBCASE("ties break by candidate name") {
    std::vector<Vote> votes = realize_bribed_votes(
        {{cid("a"), 2}, {cid("b"), 1}, {cid("c"), 1}}, 2, 2, cid("p"), candidates);
    REQUIRE(votes.size() == 2);
    CHECK(votes[0].chosen() == std::vector<CandidateId>{cid("a"), cid("b")});
    CHECK(votes[1].chosen() == std::vector<CandidateId>{cid("a"), cid("c")});
  }

  SUBCASE("bad demand systems are internal errors") {
    CHECK_THROWS_AS(realize_bribed_votes({{cid("a"), 4}, {cid("b"), 2}}, 3, 2, cid("p"), candidates),
                    std::logic_error);  // entry above count
    CHECK_THROWS_AS(realize_bribed_votes({{cid("a"), 1}, {cid("b"), 1}}, 3, 2, cid("p"), candidates),
                    std::logic_error);  // wrong total
    CHECK_THROWS_AS(realize_bribed_votes({{cid("p"), 1}, {cid("b"), 1}}, 1, 2, cid("p"), candidates),
                    std::logic_error);  // targets the preferred candidate
    CHECK_THROWS_AS(realize_bribed_votes({{cid("z"), 1}, {cid("b"), 1}}, 1, 2, cid("p"), candidates),
                    std::logic_error);  // unknown candidate
    CHECK_THROWS_AS(realize_bribed_votes({{cid("a"), 2}}, 1, 2, cid("p"), candidates),
                    std::logic_error);  // one vote cannot veto a twice
  }
}

TEST_CASE("exact 3-veto bribery flips a loss with one bribe") {
  BriberyInstance instance{{cid("p"), cid("a"), cid("b"), cid("c")},
                           {veto3("p", "a", "b"), veto3("p", "a", "b")},
                           cid("p"),
                           0,
                           Rule{RuleKind::kVeto, 3}};
  // c is vetoed by nobody, so p loses outright without help.
  CHECK_FALSE(solve_bribery_3veto_exact(instance).yes);

  instance.budget = 1;
  AttackDecision decision = solve_bribery_3veto_exact(instance);
  CHECK(decision.yes);
  CHECK(decision.objective == 1);
  REQUIRE(decision.bribery.has_value());
  REQUIRE(decision.bribery->bribed.size() == 1);
  Election after = apply_bribery(to_election(instance), *decision.bribery);
  CHECK(is_winner(after, instance.preferred));
}

TEST_CASE("exact 3-veto bribery enforces its voter cap and trivial case") {
  BriberyInstance tiny{{cid("p"), cid("a"), cid("b")},
                       {veto3("p", "a", "b")},
                       cid("p"),
                       0,
                       Rule{RuleKind::kVeto, 3}};
  AttackDecision decision = solve_bribery_3veto_exact(tiny);
  CHECK(decision.yes);
  CHECK(decision.objective == 0);

  BriberyInstance big{{cid("p"), cid("a"), cid("b"), cid("c")},
                      {},
                      cid("p"),
                      0,
                      Rule{RuleKind::kVeto, 3}};
  for (int i = 0; i < kExact3VetoVoterCap + 1; ++i) big.voters.push_back(veto3("a", "b", "c"));
  CHECK_THROWS_AS(solve_bribery_3veto_exact(big), CapExceeded);
}

TEST_CASE("restricted exact cover instances are validated structurally") {
  Rx3cInstance good = uncoverable_rx3c();
  CHECK_NOTHROW(validate(good));

  Rx3cInstance wrong_count = good;
  wrong_count.elements = {"1", "2", "3", "4"};
  CHECK_THROWS_AS(validate(wrong_count), std::invalid_argument);

  Rx3cInstance mismatched = good;
  mismatched.sets.pop_back();
  CHECK_THROWS_AS(validate(mismatched), std::invalid_argument);

  Rx3cInstance duplicate_member = good;
  duplicate_member.sets[0] = {"1", "1", "2"};
  CHECK_THROWS_AS(validate(duplicate_member), std::invalid_argument);

  Rx3cInstance unknown_element = good;
  unknown_element.sets[0] = {"1", "2", "7"};
  CHECK_THROWS_AS(validate(unknown_element), std::invalid_argument);

  Rx3cInstance uneven = good;
  // Swapping a 3 for a 2 makes 3 occur twice and 2 four times.
  uneven.sets[2] = {"2", "4", "5"};
  CHECK_THROWS_AS(validate(uneven), std::invalid_argument);

  Rx3cInstance bad_token = good;
  bad_token.elements[0] = "#1";
  bad_token.sets[0][0] = "#1";
  bad_token.sets[1][0] = "#1";
  bad_token.sets[4][0] = "#1";
  CHECK_THROWS_AS(validate(bad_token), std::invalid_argument);
}

TEST_CASE("the exact-cover brute forcer finds covers and respects its cap") {
  CHECK_FALSE(solve_rx3c_brute(uncoverable_rx3c()).has_value());

  Rx3cInstance trivial{{"e1", "e2", "e3"},
                       {{"e1", "e2", "e3"}, {"e1", "e2", "e3"}, {"e1", "e2", "e3"}}};
  auto cover = solve_rx3c_brute(trivial);
  REQUIRE(cover.has_value());
  CHECK(cover->size() == 1);

  Rx3cInstance generated = gen_rx3c(2, 7);
  CHECK_NOTHROW(validate(generated));
  auto chosen = solve_rx3c_brute(generated);
  REQUIRE(chosen.has_value());
  REQUIRE(chosen->size() == 2);
  std::set<std::string> covered;
  for (int s : *chosen) {
    for (const std::string& e : generated.sets[static_cast<size_t>(s)]) {
      CHECK(covered.insert(e).second);  // disjointness
    }
  }
  CHECK(covered.size() == generated.elements.size());

  CHECK_THROWS_AS(solve_rx3c_brute(gen_rx3c(9, 1)), CapExceeded);
}

TEST_CASE("the hardness reduction produces the documented 3-veto instance") {
  const int k = 2;
  Rx3cInstance source = gen_rx3c(k, 11);
  BriberyInstance reduced = reduce_rx3c_to_3veto(source);

  CHECK(reduced.rule == Rule{RuleKind::kVeto, 3});
  CHECK(reduced.budget == k);
  CHECK(reduced.preferred == cid("p"));
  CHECK(reduced.voters.size() == 4 * k + 2);
  // p, p1, p2, k*3 dummies, 3k elements.
  CHECK(reduced.candidates.size() == 3 + 3 * k + 3 * k);

  std::map<std::string, int> tally;
  for (const Voter& voter : reduced.voters) {
    for (const CandidateId& c : voter.vote.chosen()) ++tally[c.name()];
  }
  CHECK(tally.at("p") == 2);
  CHECK(tally.at("p1") == 2);
  CHECK(tally.at("p2") == 2);
  for (int i = 1; i <= 3 * k; ++i) CHECK(tally.at("d" + std::to_string(i)) == 1);
  for (const std::string& e : source.elements) CHECK(tally.at(e) == 3);

  // Set voters are bribable at price 1; guard and dummy voters cost k+1.
  int cheap = 0, dear = 0;
  for (const Voter& voter : reduced.voters) {
    if (voter.price == 1) ++cheap;
    if (voter.price == k + 1) ++dear;
  }
  CHECK(cheap == 3 * k);
  CHECK(dear == k + 2);
}

TEST_CASE("reduction candidate names must not collide with the source elements") {
  Rx3cInstance collision{{"p", "q", "r"}, {{"p", "q", "r"}, {"p", "q", "r"}, {"p", "q", "r"}}};
  CHECK_NOTHROW(validate(collision));
  CHECK_THROWS_AS(reduce_rx3c_to_3veto(collision), std::invalid_argument);
}

TEST_CASE("exact cover and reduced 3-veto bribery answer alike") {
  // Generated instances are coverable by construction.
  for (unsigned long long seed = 0; seed < 8; ++seed) {
    const int k = 1 + static_cast<int>(seed % 2);
    Rx3cInstance source = gen_rx3c(k, seed);
    CAPTURE(seed);
    CHECK(solve_rx3c_brute(source).has_value());
    AttackDecision decision = solve_bribery_3veto_exact(reduce_rx3c_to_3veto(source));
    CHECK(decision.yes);
    REQUIRE(decision.bribery.has_value());
    CHECK(plan_cost(reduce_rx3c_to_3veto(source), *decision.bribery) <= k);
  }

  Rx3cInstance source = uncoverable_rx3c();
  CHECK_FALSE(solve_rx3c_brute(source).has_value());
  CHECK_FALSE(solve_bribery_3veto_exact(reduce_rx3c_to_3veto(source)).yes);
}

TEST_CASE("generated exact-cover instances are seed-deterministic") {
  Rx3cInstance a = gen_rx3c(3, 99);
  Rx3cInstance b = gen_rx3c(3, 99);
  CHECK(a.elements == b.elements);
  CHECK(a.sets == b.sets);
  CHECK(gen_rx3c(3, 100).sets != a.sets);
  CHECK_THROWS_AS(gen_rx3c(0, 1), std::invalid_argument);
}
