#include "votematch/multigraph.hpp"

#include <stdexcept>

namespace votematch {

VertexId Multigraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  return static_cast<VertexId>(names_.size()) - 1;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, Weight weight, std::string tag) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  edges_.push_back(Edge{u, v, weight, std::move(tag)});
  return static_cast<EdgeId>(edges_.size()) - 1;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<size_t>(vertex_count()), 0);
  for (const Edge& e : edges_) {
    deg[static_cast<size_t>(e.u)] += 1;
    deg[static_cast<size_t>(e.v)] += 1;
  }
  return deg;
}

std::optional<VertexId> Multigraph::find_vertex(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

std::string MatchingViolation::describe() const {
  switch (kind) {
    case Kind::kBadEdge:
      return "invalid or repeated edge index " + std::to_string(actual);
    case Kind::kDemand:
      return "vertex " + std::to_string(vertex) + " has " + std::to_string(actual) +
             " incident selected edges, demand is " + std::to_string(expected);
    case Kind::kWeight:
      return "stated weight " + std::to_string(expected) + " but edges sum to " +
             std::to_string(actual);
  }
  return "unknown violation";
}

std::optional<MatchingViolation> verify(const PerfectBMatchingProblem& problem,
                                        const MatchingSolution& solution) {
  const Multigraph& g = problem.graph;
  if (problem.demand.size() != static_cast<size_t>(g.vertex_count())) {
    throw std::invalid_argument("demand vector size does not match vertex count");
  }
  std::vector<char> seen(static_cast<size_t>(g.edge_count()), 0);
  std::vector<long long> incident(static_cast<size_t>(g.vertex_count()), 0);
  Weight total = 0;
  for (EdgeId id : solution.selected) {
    if (id < 0 || id >= g.edge_count() || seen[static_cast<size_t>(id)]) {
      return MatchingViolation{MatchingViolation::Kind::kBadEdge, -1, 0, id};
    }
    seen[static_cast<size_t>(id)] = 1;
    const Edge& e = g.edge(id);
    incident[static_cast<size_t>(e.u)] += 1;
    incident[static_cast<size_t>(e.v)] += 1;
    total += e.weight;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (incident[static_cast<size_t>(v)] != problem.demand[static_cast<size_t>(v)]) {
      return MatchingViolation{MatchingViolation::Kind::kDemand, v,
                               problem.demand[static_cast<size_t>(v)],
                               incident[static_cast<size_t>(v)]};
    }
  }
  if (total != solution.total_weight) {
    return MatchingViolation{MatchingViolation::Kind::kWeight, -1, solution.total_weight, total};
  }
  return std::nullopt;
}

}  // namespace votematch
