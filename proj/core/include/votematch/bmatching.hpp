#pragma once

#include <optional>
#include <string>
#include <vector>

#include "votematch/blossom.hpp"
#include "votematch/multigraph.hpp"

// Perfect b-matching on multigraphs, reduced to ordinary perfect matching:
// each vertex v is split into deg(v) external copies plus deg(v) - b(v)
// padding vertices joined to them by a complete zero-weight bipartite gadget,
// and every original edge becomes one edge between the matching copies.

namespace votematch {

// Every transformed edge weight must fit in 31 bits; beyond that the engine
// throws std::overflow_error rather than risking silent wraparound.
inline constexpr Weight kMaxTransformedWeight = 2147483647;

struct TutteExpansion {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;        // simple graph
  std::vector<EdgeId> origin;             // per expanded edge; -1 for padding
  std::vector<std::string> vertex_names;  // diagnostics only
};

struct TutteOutcome {
  std::optional<TutteExpansion> expansion;
  VertexId deficient_vertex = -1;  // set when deg(v) < b(v) makes it infeasible
};

TutteOutcome tutte_expand(const PerfectBMatchingProblem& problem);

struct SolveOutcome {
  std::optional<MatchingSolution> solution;
  std::string infeasible_reason;  // set when !solution

  bool feasible() const { return solution.has_value(); }
};

// Exact optimum in either sense. Minimization runs as maximization of
// Wmax - w (valid because every perfect b-matching picks exactly sum(b)/2
// edges); negative weights are shifted up before matching for the same
// reason. The reported total_weight is in the original weights.
SolveOutcome solve(const PerfectBMatchingProblem& problem);

// Reference solver: enumerates all edge subsets. Throws CapExceeded above
// kBruteMatchingEdgeCap edges.
SolveOutcome brute_force_solve(const PerfectBMatchingProblem& problem);

}  // namespace votematch
