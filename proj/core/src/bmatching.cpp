#include "votematch/bmatching.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "votematch/caps.hpp"

namespace votematch {

namespace {

void check_demand(const PerfectBMatchingProblem& problem) {
  const int n = problem.graph.vertex_count();
  if (static_cast<int>(problem.demand.size()) != n) {
    throw std::invalid_argument("demand vector size does not match vertex count");
  }
  for (int v = 0; v < n; ++v) {
    if (problem.demand[static_cast<size_t>(v)] < 0) {
      throw std::invalid_argument("negative demand at vertex " + problem.graph.vertex_name(v));
    }
  }
}

long long total_demand(const std::vector<int>& demand) {
  return std::accumulate(demand.begin(), demand.end(), 0LL);
}

}  // namespace

TutteOutcome tutte_expand(const PerfectBMatchingProblem& problem) {
  check_demand(problem);
  const Multigraph& g = problem.graph;
  const int n = g.vertex_count();
  const std::vector<int> deg = g.degrees();
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<size_t>(v)] < problem.demand[static_cast<size_t>(v)]) {
      TutteOutcome out;
      out.deficient_vertex = v;
      return out;
    }
  }

  TutteExpansion ex;
  // Copy u_i stands for the i-th incidence of an edge at u; a copy matched to
  // a padding vertex leaves that incidence unused.
  std::vector<int> copy_base(static_cast<size_t>(n), 0);
  std::vector<int> pad_base(static_cast<size_t>(n), 0);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    copy_base[static_cast<size_t>(v)] = next;
    next += deg[static_cast<size_t>(v)];
    pad_base[static_cast<size_t>(v)] = next;
    next += deg[static_cast<size_t>(v)] - problem.demand[static_cast<size_t>(v)];
  }
  ex.vertex_count = next;
  ex.vertex_names.resize(static_cast<size_t>(next));
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < deg[static_cast<size_t>(v)]; ++i) {
      ex.vertex_names[static_cast<size_t>(copy_base[static_cast<size_t>(v)] + i)] =
          g.vertex_name(v) + "#" + std::to_string(i + 1);
    }
    int pads = deg[static_cast<size_t>(v)] - problem.demand[static_cast<size_t>(v)];
    for (int j = 0; j < pads; ++j) {
      ex.vertex_names[static_cast<size_t>(pad_base[static_cast<size_t>(v)] + j)] =
          g.vertex_name(v) + "~" + std::to_string(j + 1);
    }
  }

  std::vector<int> used(static_cast<size_t>(n), 0);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    int cu = copy_base[static_cast<size_t>(e.u)] + used[static_cast<size_t>(e.u)]++;
    int cv = copy_base[static_cast<size_t>(e.v)] + used[static_cast<size_t>(e.v)]++;
    ex.edges.push_back(WeightedEdge{cu, cv, e.weight});
    ex.origin.push_back(id);
  }
  for (int v = 0; v < n; ++v) {
    int pads = deg[static_cast<size_t>(v)] - problem.demand[static_cast<size_t>(v)];
    for (int i = 0; i < deg[static_cast<size_t>(v)]; ++i) {
      for (int j = 0; j < pads; ++j) {
        ex.edges.push_back(WeightedEdge{copy_base[static_cast<size_t>(v)] + i,
                                        pad_base[static_cast<size_t>(v)] + j, 0});
        ex.origin.push_back(-1);
      }
    }
  }
  TutteOutcome out;
  out.expansion = std::move(ex);
  return out;
}

SolveOutcome solve(const PerfectBMatchingProblem& problem) {
  check_demand(problem);
  SolveOutcome out;
  const long long total = total_demand(problem.demand);
  if (total % 2 != 0) {
    out.infeasible_reason = "total demand is odd";
    return out;
  }
  TutteOutcome tutte = tutte_expand(problem);
  if (!tutte.expansion) {
    const VertexId v = tutte.deficient_vertex;
    out.infeasible_reason =
        "vertex " + problem.graph.vertex_name(v) + " has degree " +
        std::to_string(problem.graph.degrees()[static_cast<size_t>(v)]) + " but demand " +
        std::to_string(problem.demand[static_cast<size_t>(v)]);
    return out;
  }
  TutteExpansion& ex = *tutte.expansion;

  // Every perfect matching of the expansion uses exactly sum(b)/2 original
  // edges, so negating against the maximum (for minimization) and shifting
  // negatives up are both order-preserving on totals.
  constexpr Weight kIntermediateCap = 1LL << 61;
  Weight wmax = 0;
  bool first = true;
  for (const WeightedEdge& e : ex.edges) {
    if (e.weight > kIntermediateCap || e.weight < -kIntermediateCap) {
      throw std::overflow_error("edge weight magnitude too large for exact transformation");
    }
    if (first || e.weight > wmax) {
      wmax = e.weight;
      first = false;
    }
  }
  if (problem.sense == Sense::kMinimize) {
    for (size_t i = 0; i < ex.edges.size(); ++i) {
      if (ex.origin[i] >= 0) ex.edges[i].weight = wmax - ex.edges[i].weight;
    }
  }
  Weight wmin = 0;
  for (size_t i = 0; i < ex.edges.size(); ++i) {
    if (ex.origin[i] >= 0 && ex.edges[i].weight < wmin) wmin = ex.edges[i].weight;
  }
  if (wmin < 0) {
    for (size_t i = 0; i < ex.edges.size(); ++i) {
      if (ex.origin[i] >= 0) ex.edges[i].weight -= wmin;
    }
  }
  for (const WeightedEdge& e : ex.edges) {
    if (e.weight > kMaxTransformedWeight || e.weight < -kMaxTransformedWeight) {
      throw std::overflow_error("transformed edge weight exceeds the 31-bit safety cap");
    }
  }

  std::optional<SimpleMatching> matched = max_weight_perfect_matching(ex.vertex_count, ex.edges);
  if (!matched) {
    out.infeasible_reason = "no perfect b-matching exists";
    return out;
  }

  MatchingSolution solution;
  for (int id : matched->selected) {
    EdgeId orig = ex.origin[static_cast<size_t>(id)];
    if (orig >= 0) solution.selected.push_back(orig);
  }
  std::sort(solution.selected.begin(), solution.selected.end());
  if (static_cast<long long>(solution.selected.size()) != total / 2) {
    throw std::logic_error("expansion matching selected a wrong number of original edges");
  }
  for (EdgeId id : solution.selected) {
    solution.total_weight += problem.graph.edge(id).weight;
  }
  if (auto violation = verify(problem, solution)) {
    throw std::logic_error("matching engine produced an invalid solution: " +
                           violation->describe());
  }
  out.solution = std::move(solution);
  return out;
}

SolveOutcome brute_force_solve(const PerfectBMatchingProblem& problem) {
  check_demand(problem);
  const int m = problem.graph.edge_count();
  if (m > kBruteMatchingEdgeCap) {
    throw CapExceeded("brute-force matching supports at most " +
                      std::to_string(kBruteMatchingEdgeCap) + " edges, got " + std::to_string(m));
  }
  const int n = problem.graph.vertex_count();
  SolveOutcome out;
  bool have = false;
  Weight best = 0;
  std::uint32_t best_mask = 0;
  std::vector<int> incidence(static_cast<size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::fill(incidence.begin(), incidence.end(), 0);
    Weight weight = 0;
    for (int id = 0; id < m; ++id) {
      if (mask & (1u << id)) {
        const Edge& e = problem.graph.edge(id);
        ++incidence[static_cast<size_t>(e.u)];
        ++incidence[static_cast<size_t>(e.v)];
        weight += e.weight;
      }
    }
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      if (incidence[static_cast<size_t>(v)] != problem.demand[static_cast<size_t>(v)]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    bool better = !have || (problem.sense == Sense::kMaximize ? weight > best : weight < best);
    if (better) {
      have = true;
      best = weight;
      best_mask = mask;
    }
  }
  if (!have) {
    out.infeasible_reason = "no perfect b-matching exists";
    return out;
  }
  MatchingSolution solution;
  solution.total_weight = best;
  for (int id = 0; id < m; ++id) {
    if (best_mask & (1u << id)) solution.selected.push_back(id);
  }
  out.solution = std::move(solution);
  return out;
}

}  // namespace votematch
