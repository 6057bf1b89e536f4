#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "votematch/attack.hpp"
#include "votematch/multigraph.hpp"
#include "votematch/veto_bribery.hpp"

// Line-oriented text formats. '#' starts a comment, blank lines are ignored,
// sections appear in a fixed order, and serializers emit byte-deterministic
// output that parses back to the same value.

namespace votematch {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

enum class ProblemKind { kCcrv, kPricedCcrv, kBribery };

// One parsed election problem file, order-preserving (candidates and voters
// stay in file order; Election sorts candidates internally).
struct ProblemFile {
  std::string name;
  ProblemKind kind = ProblemKind::kCcrv;
  Rule rule;
  long long limit = 0;
  CandidateId preferred{"p"};
  std::vector<CandidateId> candidates;
  std::vector<Voter> registered;
  std::vector<Voter> unregistered;  // control kinds only
};

ProblemFile parse_problem(const std::string& text);
std::string write_problem(const ProblemFile& file);

CcrvInstance to_ccrv_instance(const ProblemFile& file);
BriberyInstance to_bribery_instance(const ProblemFile& file);
ProblemFile to_problem_file(const std::string& name, const CcrvInstance& instance);
ProblemFile to_problem_file(const std::string& name, const BriberyInstance& instance);

// Graph files carry vertices with demands and weighted (possibly repeated)
// edges; the optimization sense is a solver argument, not file content.
PerfectBMatchingProblem read_graph(const std::string& text);
std::string write_graph(const PerfectBMatchingProblem& problem);

Rx3cInstance read_rx3c(const std::string& text);
std::string write_rx3c(const Rx3cInstance& instance);

}  // namespace votematch
