#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "votematch/multigraph.hpp"

// Minimum-weight b-edge cover (every vertex needs at least demand[v]
// incident chosen edges) solved by complementation: E' covers iff E \ E'
// leaves each vertex degree at most deg(v) - b(v). Also ships a fixed
// counterexample to a published edge-cover-based reduction from numerical
// matching with target sums, which the audit command re-checks from scratch.

namespace votematch {

struct BEdgeCoverProblem {
  Multigraph graph;
  std::vector<int> demand;  // lower bounds
};

struct CoverViolation {
  VertexId vertex = -1;  // first offending vertex, or -1 for a bad edge list
  long long required = 0;
  long long actual = 0;
  std::string describe() const;
};

// Total weight on success. Edge ids must be valid and distinct.
std::variant<Weight, CoverViolation> verify_b_edge_cover(const BEdgeCoverProblem& problem,
                                                         const std::vector<EdgeId>& edges);

struct BEdgeCover {
  std::vector<EdgeId> edges;  // ascending
  Weight total_weight = 0;
};

// Exact minimum via maximum-weight complements: a slack vertex z absorbs the
// unused degree capacity and a parity partner z' pins the complement's edge
// count, which is swept over all even values. nullopt iff some deg(v) < b(v).
std::optional<BEdgeCover> min_weight_b_edge_cover(const BEdgeCoverProblem& problem);

// Reference solver over all edge subsets; throws CapExceeded above
// kBruteCoverEdgeCap edges.
std::optional<BEdgeCover> brute_force_min_cover(const BEdgeCoverProblem& problem);

// Numerical matching with target sums: can A and B be paired bijectively so
// that the pair sums are exactly the multiset C?
struct NmtsInstance {
  std::vector<long long> a;
  std::vector<long long> b;
  std::vector<long long> c;
};

// Throws CapExceeded above kBruteNmtsSizeCap elements per list.
bool solve_nmts_brute(const NmtsInstance& instance);

// The fixed refutation: an NMTS no-instance whose reduced cover problem
// nevertheless admits a cover at the reduction's acceptance threshold.
struct BtCounterexample {
  BEdgeCoverProblem problem;
  std::vector<EdgeId> published_cover;
  NmtsInstance nmts;
  Weight threshold = 0;
};

BtCounterexample build_bt_counterexample();

}  // namespace votematch
