#pragma once

#include <optional>
#include <string>
#include <vector>

// Undirected multigraphs with integer edge weights and per-vertex demands,
// plus the exact-incidence checker for perfect b-matchings.

namespace votematch {

using VertexId = int;
using EdgeId = int;
using Weight = long long;

struct Edge {
  VertexId u = -1;
  VertexId v = -1;
  Weight weight = 0;
  std::string tag;  // free-form label for diagnostics, not serialized
};

// Parallel edges are distinct EdgeIds; self-loops are rejected.
class Multigraph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId u, VertexId v, Weight weight, std::string tag = {});

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return names_[static_cast<size_t>(v)]; }
  const std::vector<std::string>& vertex_names() const { return names_; }

  std::vector<int> degrees() const;
  // First vertex with the given name, if any. Names are labels, not keys;
  // uniqueness is only enforced by the text serializer.
  std::optional<VertexId> find_vertex(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

enum class Sense { kMaximize, kMinimize };

// Find E' with every vertex incident to exactly demand[v] edges of E',
// optimizing total weight in the given sense.
struct PerfectBMatchingProblem {
  Multigraph graph;
  std::vector<int> demand;
  Sense sense = Sense::kMaximize;
};

struct MatchingSolution {
  std::vector<EdgeId> selected;  // ascending, no repeats
  Weight total_weight = 0;
};

struct MatchingViolation {
  enum class Kind { kBadEdge, kDemand, kWeight };
  Kind kind = Kind::kDemand;
  VertexId vertex = -1;  // kDemand: first offending vertex in vertex order
  long long expected = 0;
  long long actual = 0;
  std::string describe() const;
};

// Exact incidence check plus weight recomputation. nullopt means valid.
std::optional<MatchingViolation> verify(const PerfectBMatchingProblem& problem,
                                        const MatchingSolution& solution);

}  // namespace votematch
