#pragma once

#include <optional>
#include <vector>

#include "votematch/multigraph.hpp"

// Maximum-weight matching on simple graphs (Galil's O(V^3) primal-dual
// blossom algorithm). All arithmetic is 64-bit integer; vertex duals are
// premultiplied by 2 so integer weights stay integral throughout, and every
// solve is followed by a complementary-slackness audit of the final duals.

namespace votematch {

struct WeightedEdge {
  int u = -1;
  int v = -1;
  Weight weight = 0;
};

// Returns mate[v] (partner vertex or -1) for the maximum-weight matching.
// With max_cardinality, maximizes cardinality first, weight second.
// Requires a simple graph: no self-loops, no repeated vertex pairs.
std::vector<int> max_weight_matching(int n, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

struct SimpleMatching {
  std::vector<int> selected;  // indices into the input edge list, ascending
  Weight total_weight = 0;
};

// nullopt when the graph admits no perfect matching.
std::optional<SimpleMatching> max_weight_perfect_matching(
    int n, const std::vector<WeightedEdge>& edges);

}  // namespace votematch
