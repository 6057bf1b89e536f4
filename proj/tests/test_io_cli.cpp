#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "votematch/cli.hpp"
#include "votematch/generate.hpp"
#include "votematch/io.hpp"

using namespace votematch;

namespace {

CandidateId cid(const char* name) { return CandidateId(name); }

// Scratch files for CLI round trips, removed when the test binary exits.
class TempFile {
 public:
  TempFile(const std::string& stem, const std::string& content) {
    path_ = (std::filesystem::temp_directory_path() / ("votematch_test_" + stem)).string();
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
  int count = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) ++count;
  }
  return count;
}

bool problem_files_equal(const ProblemFile& a, const ProblemFile& b) {
  return a.name == b.name && a.kind == b.kind && a.rule == b.rule && a.limit == b.limit &&
         a.preferred == b.preferred && a.candidates == b.candidates &&
         a.registered == b.registered && a.unregistered == b.unregistered;
}

// The example files with their leading comments stripped, for line-number
// surgery in the parse-error tests.
std::string control_text(const std::string& voter_line) {
  return "election t\n"       // line 1
         "candidates p a b c\n"
         "preferred p\n"
         "problem ccrv\n"
         "rule 2approval\n"   // line 5
         "limit 1\n"
         "registered\n"       // line 7
         + voter_line +       // line 8
         "end\n";
}

}  // namespace

TEST_CASE("the example files parse into the published instances") {
  ProblemFile ex1 = parse_problem(testutil::slurp(testutil::fixture_path("ex1.election")));
  CHECK(ex1.name == "ex1");
  CHECK(ex1.kind == ProblemKind::kCcrv);
  CHECK(ex1.rule == Rule{RuleKind::kApproval, 2});
  CHECK(ex1.limit == 3);
  CHECK(ex1.preferred == cid("p"));
  CHECK(ex1.candidates.size() == 4);
  CHECK(ex1.registered.size() == 5);    // counts expand to individual voters
  CHECK(ex1.unregistered.size() == 4);
  CHECK(ex1.registered[1] == ex1.registered[2]);  // 2 approve a b

  ProblemFile ex2 = parse_problem(testutil::slurp(testutil::fixture_path("ex2.election")));
  CHECK(ex2.kind == ProblemKind::kBribery);
  CHECK(ex2.rule == Rule{RuleKind::kVeto, 2});
  CHECK(ex2.limit == 3);
  CHECK(ex2.registered.size() == 9);
  CHECK(ex2.unregistered.empty());
  CHECK(ex2.registered[8].price == 2);
}

TEST_CASE("parse errors carry the physical line number") {
  CHECK_THROWS_WITH_AS(parse_problem(control_text("1 approve p p\n")),
                       "line 8: vote chooses the same candidate twice", ParseError);
  CHECK_THROWS_WITH_AS(parse_problem(control_text("1 veto p a\n")),
                       "line 8: vote kind does not match the rule", ParseError);
  CHECK_THROWS_WITH_AS(parse_problem(control_text("1 approve p z\n")),
                       "line 8: unknown candidate z", ParseError);
  CHECK_THROWS_WITH_AS(parse_problem(control_text("1 approve p\n")),
                       "line 8: vote names 1 candidates, the rule needs 2", ParseError);
  CHECK_THROWS_WITH_AS(parse_problem(control_text("0 approve p a\n")),
                       "line 8: voter count must be in 1..1000000", ParseError);
  CHECK_THROWS_WITH_AS(parse_problem(control_text("1 price -2 approve p a\n")),
                       "line 8: price must be nonnegative", ParseError);

  // A second 'end' counts as content after the first one, at its own line.
  try {
    parse_problem(control_text("1 approve p a\nend\n"));
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 10);
    CHECK(std::string(e.what()) == "line 10: unexpected content after 'end'");
  }
}

TEST_CASE("structural problems in the header are rejected where they occur") {
  // Comment lines count toward line numbers but are otherwise invisible.
  CHECK_THROWS_WITH_AS(parse_problem("# a comment\n\nelection t\ncandidates p a\n"
                                     "preferred q\n"),
                       "line 5: preferred candidate q is not in the candidate list", ParseError);
  CHECK_THROWS_WITH_AS(parse_problem("election t\npreferred p\ncandidates p a\n"),
                       "line 2: expected 'candidates', got 'preferred'", ParseError);
  CHECK_THROWS_WITH_AS(parse_problem("election t\ncandidates p a p\n"),
                       "line 2: duplicate candidate p", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_problem("election t\ncandidates p a\npreferred p\nproblem ccrv\nrule 2veto\n"),
      "line 5: replacement control requires the 2approval rule", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_problem("election t\ncandidates p a\npreferred p\nproblem bribery\nrule 3veto\n"),
      "line 5: the rule chooses more candidates than exist", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_problem("election t\ncandidates p a\npreferred p\nproblem ccrv\n"
                    "rule 2approval\nlimit x\n"),
      "line 6: expected an integer limit, got 'x'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_problem("election t\ncandidates p a\npreferred p\nproblem ccrv\n"
                    "rule 2approval\nlimit -1\n"),
      "line 6: limit must be nonnegative", ParseError);

  // A bribery file must not open an unregistered block.
  CHECK_THROWS_WITH_AS(
      parse_problem("election t\ncandidates p a b\npreferred p\nproblem bribery\n"
                    "rule 2veto\nlimit 0\nregistered\n1 veto a b\nunregistered\nend\n"),
      "line 9: bribery instances have no unregistered block", ParseError);

  // Truncated file: the error points at the last line present.
  CHECK_THROWS_WITH_AS(
      parse_problem("election t\ncandidates p a\npreferred p\nproblem ccrv\n"
                    "rule 2approval\nlimit 0\nregistered\n1 approve p a\n"),
      "line 8: missing 'end' line", ParseError);
}

TEST_CASE("problem files serialize deterministically and round-trip") {
  for (const char* name : {"ex1.election", "ex2.election"}) {
    CAPTURE(name);
    ProblemFile parsed = parse_problem(testutil::slurp(testutil::fixture_path(name)));
    std::string once = write_problem(parsed);
    ProblemFile reparsed = parse_problem(once);
    CHECK(problem_files_equal(parsed, reparsed));
    CHECK(write_problem(reparsed) == once);
  }
}

TEST_CASE("the writer groups adjacent identical voters and omits unit prices") {
  ProblemFile file;
  file.name = "t";
  file.kind = ProblemKind::kBribery;
  file.rule = Rule{RuleKind::kVeto, 2};
  file.limit = 0;
  file.preferred = cid("p");
  file.candidates = {cid("p"), cid("a"), cid("b")};
  Voter ab{Vote(VoteKind::kVeto, {cid("a"), cid("b")}), 1};
  Voter pa{Vote(VoteKind::kVeto, {cid("p"), cid("a")}), 2};
  file.registered = {ab, ab, ab, pa, pa, ab};
  CHECK(write_problem(file) ==
        "election t\n"
        "candidates p a b\n"
        "preferred p\n"
        "problem bribery\n"
        "rule 2veto\n"
        "limit 0\n"
        "registered\n"
        "3 veto a b\n"
        "2 price 2 veto p a\n"
        "1 veto a b\n"
        "end\n");
}

TEST_CASE("instance conversions reject mismatched problem kinds and round-trip") {
  ProblemFile ex1 = parse_problem(testutil::slurp(testutil::fixture_path("ex1.election")));
  ProblemFile ex2 = parse_problem(testutil::slurp(testutil::fixture_path("ex2.election")));
  CHECK_THROWS_AS(to_bribery_instance(ex1), std::invalid_argument);
  CHECK_THROWS_AS(to_ccrv_instance(ex2), std::invalid_argument);

  CcrvInstance control = to_ccrv_instance(ex1);
  ProblemFile back = to_problem_file("ex1", control);
  CHECK(problem_files_equal(ex1, back));

  BriberyInstance bribery = to_bribery_instance(ex2);
  ProblemFile back2 = to_problem_file("ex2", bribery);
  CHECK(problem_files_equal(ex2, back2));
}

TEST_CASE("graph files round-trip with grouped parallel edges") {
  std::string text =
      "graph\n"
      "vertex a b 1\n"
      "vertex b b 2\n"
      "vertex c b 1\n"
      "edge a b weight 5 count 2\n"
      "edge b c weight -1\n"
      "end\n";
  PerfectBMatchingProblem problem = read_graph(text);
  CHECK(problem.graph.vertex_count() == 3);
  CHECK(problem.graph.edge_count() == 3);  // the count expands
  CHECK(problem.demand == std::vector<int>{1, 2, 1});
  CHECK(problem.graph.edge(0).weight == 5);
  CHECK(problem.graph.edge(2).weight == -1);
  CHECK(write_graph(problem) == text);
}

TEST_CASE("graph files reject malformed structure where it occurs") {
  CHECK_THROWS_WITH_AS(read_graph("graph\nvertex a b 1\nvertex a b 1\nend\n"),
                       "line 3: duplicate vertex a", ParseError);
  CHECK_THROWS_WITH_AS(read_graph("graph\nvertex a b 1\nedge a c weight 1\nend\n"),
                       "line 3: unknown vertex c", ParseError);
  CHECK_THROWS_WITH_AS(read_graph("graph\nvertex a b 1\nedge a a weight 1\nend\n"),
                       "line 3: self-loops are not allowed", ParseError);
  CHECK_THROWS_WITH_AS(read_graph("graph\nvertex a b -1\nend\n"),
                       "line 2: demand must be in 0..1000000", ParseError);
  CHECK_THROWS_WITH_AS(
      read_graph("graph\nvertex a b 1\nvertex b b 1\nedge a b weight 1\nvertex c b 1\nend\n"),
      "line 5: vertex lines must precede edge lines", ParseError);
  CHECK_THROWS_WITH_AS(
      read_graph("graph\nvertex a b 1\nvertex b b 1\nedge a b weight 1 count 0\nend\n"),
      "line 4: count must be in 1..1000000", ParseError);

  // Names the parser could never have produced do not serialize.
  PerfectBMatchingProblem unprintable;
  unprintable.graph.add_vertex("a#1");
  unprintable.demand = {0};
  CHECK_THROWS_AS(write_graph(unprintable), std::invalid_argument);
}

TEST_CASE("exact-cover files round-trip, including the empty instance") {
  Rx3cInstance generated = gen_rx3c(2, 13);
  std::string text = write_rx3c(generated);
  Rx3cInstance back = read_rx3c(text);
  CHECK(back.elements == generated.elements);
  CHECK(back.sets == generated.sets);
  CHECK(write_rx3c(back) == text);

  Rx3cInstance empty = read_rx3c("rx3c\nelements\nend\n");
  CHECK(empty.elements.empty());
  CHECK(empty.sets.empty());
  CHECK(write_rx3c(empty) == "rx3c\nelements\nend\n");

  CHECK_THROWS_WITH_AS(read_rx3c("rx3c\nelements a b c\nset a b\nend\n"),
                       "line 3: expected 'set <a> <b> <c>'", ParseError);
  // Structural validation runs on parse too: a occurs four times, d twice.
  CHECK_THROWS_AS(read_rx3c("rx3c\nelements a b c d e f\n"
                            "set a b c\nset a b c\nset a b c\n"
                            "set d e f\nset d e f\nset a e f\nend\n"),
                  std::invalid_argument);
}

TEST_CASE("generated elections are seed-deterministic") {
  GenElectionOptions options;
  options.seed = 77;
  options.kind = ProblemKind::kPricedCcrv;
  std::string first = write_problem(gen_election(options));
  std::string second = write_problem(gen_election(options));
  CHECK(first == second);
  options.seed = 78;
  CHECK(write_problem(gen_election(options)) != first);

  // Round trip through the text format preserves the instance.
  ProblemFile parsed = parse_problem(first);
  CHECK(write_problem(parsed) == first);
}

TEST_CASE("cli: solve reports decisions, witnesses, and re-checks") {
  CliResult ex1 = run_cli({"solve", testutil::fixture_path("ex1.election"), "--witness",
                           "--check"});
  CHECK(ex1.code == 0);
  CHECK(ex1.err.empty());
  CHECK(ex1.out.rfind("decision yes\nobjective 2\n", 0) == 0);
  CHECK(count_lines_starting(ex1.out, "replace v") == 2);
  CHECK(ex1.out.find("check winner yes\n") != std::string::npos);

  CliResult again = run_cli({"solve", testutil::fixture_path("ex1.election"), "--witness",
                             "--check"});
  CHECK(again.out == ex1.out);  // byte-deterministic

  CliResult ex2 = run_cli({"solve", testutil::fixture_path("ex2.election"), "--witness",
                           "--check"});
  CHECK(ex2.code == 0);
  CHECK(ex2.out.rfind("decision yes\nobjective 3\n", 0) == 0);
  CHECK(count_lines_starting(ex2.out, "bribe v") == 3);
  CHECK(ex2.out.find("check winner yes\n") != std::string::npos);
}

TEST_CASE("cli: solve handles priced control and 3-veto bribery files") {
  TempFile priced("priced.election",
                  "election t\n"
                  "candidates p a b c\n"
                  "preferred p\n"
                  "problem priced-ccrv\n"
                  "rule 2approval\n"
                  "limit 2\n"
                  "registered\n"
                  "2 approve a b\n"
                  "unregistered\n"
                  "2 price 0 approve p c\n"
                  "end\n");
  // One swap reaches the all-ones score profile: drop an ab voter (price 1)
  // for a free pc voter, leaving everyone tied at 1.
  CliResult result = run_cli({"solve", priced.path(), "--witness", "--check"});
  CHECK(result.code == 0);
  CHECK(result.out.rfind("decision yes\nobjective 1\n", 0) == 0);
  CHECK(result.out.find("check winner yes\n") != std::string::npos);

  TempFile veto3("veto3.election",
                 "election t3\n"
                 "candidates p a b c\n"
                 "preferred p\n"
                 "problem bribery\n"
                 "rule 3veto\n"
                 "limit 1\n"
                 "registered\n"
                 "2 veto p a b\n"
                 "end\n");
  CliResult v3 = run_cli({"solve", veto3.path(), "--witness", "--check"});
  CHECK(v3.code == 0);
  CHECK(v3.out.rfind("decision yes\nobjective 1\n", 0) == 0);
  CHECK(count_lines_starting(v3.out, "bribe v") == 1);
  CHECK(v3.out.find("check winner yes\n") != std::string::npos);
}

TEST_CASE("cli: oracle decides small files and refuses big ones") {
  CliResult small = run_cli({"oracle", testutil::fixture_path("ex1.election")});
  CHECK(small.code == 0);
  CHECK(small.out == "decision yes\nobjective 2\n");

  CliResult big = run_cli({"oracle", testutil::fixture_path("ex2.election")});
  CHECK(big.code == 2);
  CHECK(big.out.empty());
  CHECK(big.err.rfind("cap exceeded: ", 0) == 0);
}

TEST_CASE("cli: match optimizes graph files in both senses") {
  TempFile square("square.graph",
                  "graph\n"
                  "vertex a b 1\n"
                  "vertex b b 1\n"
                  "vertex c b 1\n"
                  "vertex d b 1\n"
                  "edge a b weight 3\n"
                  "edge b c weight 4\n"
                  "edge c d weight 5\n"
                  "edge d a weight 6\n"
                  "end\n");
  CHECK(run_cli({"match", square.path()}).out == "objective 10\n");
  CHECK(run_cli({"match", square.path(), "--sense", "min"}).out == "objective 8\n");
  CHECK(run_cli({"match", square.path(), "--threshold", "10"}).out ==
        "objective 10\ndecision yes\n");
  CHECK(run_cli({"match", square.path(), "--threshold", "11"}).out ==
        "objective 10\ndecision no\n");
  CHECK(run_cli({"match", square.path(), "--sense", "min", "--threshold", "8"}).out ==
        "objective 8\ndecision yes\n");
  CHECK(run_cli({"match", square.path(), "--sense", "bogus"}).code == 1);

  TempFile odd("odd.graph",
               "graph\n"
               "vertex a b 1\n"
               "vertex b b 1\n"
               "vertex c b 1\n"
               "edge a b weight 1\n"
               "edge b c weight 1\n"
               "end\n");
  CliResult infeasible = run_cli({"match", odd.path(), "--threshold", "0"});
  CHECK(infeasible.code == 0);
  CHECK(infeasible.out == "infeasible total demand is odd\ndecision no\n");
}

TEST_CASE("cli: the audit re-derives the counterexample verdict") {
  CliResult audit = run_cli({"audit-counterexample"});
  CHECK(audit.code == 0);
  CHECK(audit.err.empty());
  CHECK(audit.out ==
        "cover weight 86\n"
        "threshold 86\n"
        "min cover weight 86\n"
        "nmts no\n"
        "refuted yes\n");
}

TEST_CASE("cli: compare pits the solver against the reference") {
  CliResult compare = run_cli({"compare", testutil::fixture_path("ex1.election")});
  CHECK(compare.code == 0);
  CHECK(compare.out ==
        "solver decision yes\n"
        "oracle decision yes\n"
        "agreement yes\n");
}

TEST_CASE("cli: generators emit parseable, seed-stable instances") {
  CliResult rx3c = run_cli({"gen", "rx3c", "--k", "2", "--seed", "5"});
  CHECK(rx3c.code == 0);
  Rx3cInstance instance = read_rx3c(rx3c.out);
  CHECK(instance.sets.size() == 6);
  CHECK(run_cli({"gen", "rx3c", "--k", "2", "--seed", "5"}).out == rx3c.out);

  CliResult election = run_cli({"gen", "election", "--seed", "9", "--problem", "bribery",
                                "--rule", "2veto", "--voters", "6", "--candidates", "4"});
  CHECK(election.code == 0);
  ProblemFile parsed = parse_problem(election.out);
  CHECK(parsed.kind == ProblemKind::kBribery);
  CHECK(parsed.rule == Rule{RuleKind::kVeto, 2});
  CHECK(parsed.registered.size() == 6);
  CHECK(parsed.candidates.size() == 4);
  CHECK(run_cli({"gen", "election", "--seed", "9", "--problem", "bribery", "--rule", "2veto",
                 "--voters", "6", "--candidates", "4"})
            .out == election.out);

  CliResult bad_rule = run_cli({"gen", "election", "--rule", "nope"});
  CHECK(bad_rule.code == 1);
  CHECK(bad_rule.err == "invalid input: unknown rule 'nope'\n");
}

TEST_CASE("cli: the hardness reduction runs end to end") {
  TempFile source("reduce.rx3c", write_rx3c(gen_rx3c(1, 3)));
  CliResult reduced = run_cli({"reduce", "rx3c", source.path()});
  CHECK(reduced.code == 0);
  ProblemFile parsed = parse_problem(reduced.out);
  CHECK(parsed.kind == ProblemKind::kBribery);
  CHECK(parsed.rule == Rule{RuleKind::kVeto, 3});
  CHECK(parsed.limit == 1);
  CHECK(parsed.registered.size() == 6);   // 4k + 2 voters at k = 1
  CHECK(parsed.candidates.size() == 9);   // p, p1, p2, three dummies, three elements
}

TEST_CASE("cli: usage and input errors exit nonzero with a message") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"bogus"}).code == 1);
  CHECK(run_cli({"solve"}).code == 1);

  CliResult missing = run_cli({"solve", "/nonexistent/votematch.election"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  TempFile bad("bad.election",
               "election t\ncandidates p a\npreferred p\nproblem ccrv\nrule 2veto\n");
  CliResult parse_fail = run_cli({"solve", bad.path()});
  CHECK(parse_fail.code == 1);
  CHECK(parse_fail.err ==
        "parse error: line 5: replacement control requires the 2approval rule\n");

  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("votematch") != std::string::npos);
  CHECK(help.out.find("solve") != std::string::npos);
}
