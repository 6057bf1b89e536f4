#include "votematch/cover_audit.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "votematch/bmatching.hpp"
#include "votematch/caps.hpp"

namespace votematch {

std::string CoverViolation::describe() const {
  if (vertex < 0) {
    return "invalid or repeated edge id " + std::to_string(actual);
  }
  return "vertex " + std::to_string(vertex) + " needs at least " + std::to_string(required) +
         " cover edges, got " + std::to_string(actual);
}

std::variant<Weight, CoverViolation> verify_b_edge_cover(const BEdgeCoverProblem& problem,
                                                         const std::vector<EdgeId>& edges) {
  const int n = problem.graph.vertex_count();
  const int m = problem.graph.edge_count();
  if (static_cast<int>(problem.demand.size()) != n) {
    throw std::invalid_argument("demand vector size does not match vertex count");
  }
  std::vector<char> seen(static_cast<size_t>(m), 0);
  std::vector<long long> incidence(static_cast<size_t>(n), 0);
  Weight total = 0;
  for (EdgeId id : edges) {
    if (id < 0 || id >= m || seen[static_cast<size_t>(id)]) {
      CoverViolation v;
      v.vertex = -1;
      v.actual = id;
      return v;
    }
    seen[static_cast<size_t>(id)] = 1;
    const Edge& e = problem.graph.edge(id);
    ++incidence[static_cast<size_t>(e.u)];
    ++incidence[static_cast<size_t>(e.v)];
    total += e.weight;
  }
  for (int v = 0; v < n; ++v) {
    if (incidence[static_cast<size_t>(v)] < problem.demand[static_cast<size_t>(v)]) {
      CoverViolation violation;
      violation.vertex = v;
      violation.required = problem.demand[static_cast<size_t>(v)];
      violation.actual = incidence[static_cast<size_t>(v)];
      return violation;
    }
  }
  return total;
}

std::optional<BEdgeCover> min_weight_b_edge_cover(const BEdgeCoverProblem& problem) {
  const int n = problem.graph.vertex_count();
  const int m = problem.graph.edge_count();
  if (static_cast<int>(problem.demand.size()) != n) {
    throw std::invalid_argument("demand vector size does not match vertex count");
  }
  for (int v = 0; v < n; ++v) {
    if (problem.demand[static_cast<size_t>(v)] < 0) {
      throw std::invalid_argument("negative demand at vertex " + problem.graph.vertex_name(v));
    }
  }
  const std::vector<int> deg = problem.graph.degrees();
  std::vector<int> spare(static_cast<size_t>(n), 0);  // deg(v) - b(v)
  long long spare_total = 0;
  for (int v = 0; v < n; ++v) {
    spare[static_cast<size_t>(v)] = deg[static_cast<size_t>(v)] - problem.demand[static_cast<size_t>(v)];
    if (spare[static_cast<size_t>(v)] < 0) return std::nullopt;
    spare_total += spare[static_cast<size_t>(v)];
  }

  // A subset is a cover exactly when its complement respects the spare
  // capacities, so maximize the complement's weight. The slack vertex z
  // absorbs unused spare capacity; the edges into z' fix how much of z's
  // demand is met through real complement edges (t/2 of them per pass).
  PerfectBMatchingProblem base;
  base.sense = Sense::kMaximize;
  base.graph = problem.graph;
  const VertexId z = base.graph.add_vertex("z");
  const VertexId zprime = base.graph.add_vertex("z'");
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < spare[static_cast<size_t>(v)]; ++j) {
      base.graph.add_edge(v, z, 0, "slack");
    }
  }
  for (long long j = 0; j < spare_total; ++j) {
    base.graph.add_edge(z, zprime, 0, "parity");
  }
  base.demand.assign(static_cast<size_t>(base.graph.vertex_count()), 0);
  for (int v = 0; v < n; ++v) {
    base.demand[static_cast<size_t>(v)] = spare[static_cast<size_t>(v)];
  }
  base.demand[static_cast<size_t>(z)] = static_cast<int>(spare_total);

  bool have = false;
  Weight best_complement = 0;
  std::vector<EdgeId> best_edges;
  for (long long t = 0; t <= spare_total; t += 2) {
    PerfectBMatchingProblem pass = base;
    pass.demand[static_cast<size_t>(zprime)] = static_cast<int>(t);
    SolveOutcome outcome = solve(pass);
    if (!outcome.feasible()) continue;
    if (!have || outcome.solution->total_weight > best_complement) {
      have = true;
      best_complement = outcome.solution->total_weight;
      best_edges.clear();
      for (EdgeId id : outcome.solution->selected) {
        if (id < m) best_edges.push_back(id);
      }
    }
  }
  if (!have) {
    throw std::logic_error("the empty complement pass cannot be infeasible");
  }

  std::vector<char> dropped(static_cast<size_t>(m), 0);
  for (EdgeId id : best_edges) dropped[static_cast<size_t>(id)] = 1;
  BEdgeCover cover;
  for (EdgeId id = 0; id < m; ++id) {
    if (!dropped[static_cast<size_t>(id)]) {
      cover.edges.push_back(id);
      cover.total_weight += problem.graph.edge(id).weight;
    }
  }
  auto check = verify_b_edge_cover(problem, cover.edges);
  if (std::holds_alternative<CoverViolation>(check)) {
    throw std::logic_error("cover solver produced an invalid cover: " +
                           std::get<CoverViolation>(check).describe());
  }
  if (std::get<Weight>(check) != cover.total_weight) {
    throw std::logic_error("cover solver miscounted its own weight");
  }
  return cover;
}

std::optional<BEdgeCover> brute_force_min_cover(const BEdgeCoverProblem& problem) {
  const int n = problem.graph.vertex_count();
  const int m = problem.graph.edge_count();
  if (static_cast<int>(problem.demand.size()) != n) {
    throw std::invalid_argument("demand vector size does not match vertex count");
  }
  if (m > kBruteCoverEdgeCap) {
    throw CapExceeded("brute-force cover supports at most " + std::to_string(kBruteCoverEdgeCap) +
                      " edges, got " + std::to_string(m));
  }
  bool have = false;
  Weight best = 0;
  std::uint32_t best_mask = 0;
  std::vector<long long> incidence(static_cast<size_t>(n));
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
      if (incidence[static_cast<size_t>(v)] < problem.demand[static_cast<size_t>(v)]) {
        ok = false;
        break;
      }
    }
    if (ok && (!have || weight < best)) {
      have = true;
      best = weight;
      best_mask = mask;
    }
  }
  if (!have) return std::nullopt;
  BEdgeCover cover;
  cover.total_weight = best;
  for (int id = 0; id < m; ++id) {
    if (best_mask & (1u << id)) cover.edges.push_back(id);
  }
  return cover;
}

bool solve_nmts_brute(const NmtsInstance& instance) {
  const size_t n = instance.a.size();
  if (instance.b.size() != n || instance.c.size() != n) {
    throw std::invalid_argument("the three lists must have equal length");
  }
  if (static_cast<int>(n) > kBruteNmtsSizeCap) {
    throw CapExceeded("brute-force target-sum matching supports at most " +
                      std::to_string(kBruteNmtsSizeCap) + " values per list, got " +
                      std::to_string(n));
  }
  std::vector<long long> targets = instance.c;
  std::sort(targets.begin(), targets.end());
  std::vector<long long> perm = instance.b;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<long long> sums(n);
    for (size_t i = 0; i < n; ++i) sums[i] = instance.a[i] + perm[i];
    std::sort(sums.begin(), sums.end());
    if (sums == targets) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

BtCounterexample build_bt_counterexample() {
  BtCounterexample out;
  out.nmts = NmtsInstance{{3, 4}, {5, 6}, {8, 9}};
  // 8n + 6(#3 - n) + 2n(n-1)n^4 with n = 2 and #3 = 3 compatible triples.
  const long long n = 2;
  const long long triples = 3;
  out.threshold = 8 * n + 6 * (triples - n) + 2 * n * (n - 1) * n * n * n * n;

  Multigraph& g = out.problem.graph;
  std::vector<int>& b = out.problem.demand;
  auto vertex = [&](const std::string& name, int demand) {
    VertexId v = g.add_vertex(name);
    b.push_back(demand);
    return v;
  };

  const VertexId row1 = vertex("row1", 1);
  const VertexId row2 = vertex("row2", 1);
  const VertexId col1 = vertex("col1", 1);
  const VertexId col2 = vertex("col2", 1);
  const VertexId v35 = vertex("v35", 2);
  const VertexId v36 = vertex("v36", 2);
  const VertexId v45 = vertex("v45", 2);
  const VertexId v46 = vertex("v46", 2);
  const VertexId t8_1 = vertex("t8_1", 1);
  const VertexId t8_2 = vertex("t8_2", 1);
  const VertexId t9_1 = vertex("t9_1", 1);
  const VertexId t9_2 = vertex("t9_2", 1);

  struct Gadget {
    VertexId star;
    VertexId num[9];  // 1-indexed
  };
  auto gadget = [&](const std::string& prefix) {
    Gadget gd{};
    gd.star = vertex(prefix + "_star", 4);
    for (int i = 1; i <= 8; ++i) {
      gd.num[i] = vertex(prefix + "_" + std::to_string(i), 1);
    }
    return gd;
  };
  Gadget g35 = gadget("g35");
  Gadget g36 = gadget("g36");
  Gadget g45 = gadget("g45");

  std::vector<EdgeId>& cover = out.published_cover;
  const Weight heavy = n * n * n * n;
  auto edge = [&](VertexId u, VertexId v, Weight w, bool in_cover) {
    EdgeId id = g.add_edge(u, v, w);
    if (in_cover) cover.push_back(id);
    return id;
  };

  // The 8-cycle through the pair vertices; the published cover keeps the four
  // heavy edges that hit v46 twice and each row/col vertex once.
  edge(row1, v36, heavy, true);
  edge(v36, col2, heavy, false);
  edge(col2, v46, heavy, true);
  edge(v46, row2, heavy, true);
  edge(row2, v45, heavy, false);
  edge(v45, col1, heavy, true);
  edge(col1, v35, heavy, false);
  edge(v35, row1, heavy, false);

  // Connectivity gadgets: a star vertex joined to 1..8 plus chords (3,4) and
  // (7,8); attachments lead to a pair vertex (via 1 and 2) and two target
  // vertices (via 6 and 5).
  struct GadgetWiring {
    const Gadget& gd;
    VertexId pair_vertex;
    VertexId target6;
    VertexId target5;
    // Which of the gadget's internal edges the published cover keeps.
    bool star_spokes[9];
    bool chord34;
    bool chord78;
  };
  const GadgetWiring wirings[] = {
      {g35, v35, t8_1, t8_2, {false, false, false, true, true, false, false, true, true}, false,
       false},
      {g36, v36, t9_1, t9_2, {false, false, true, false, false, true, false, true, true}, true,
       false},
      {g45, v45, t9_1, t9_2, {false, false, true, false, false, false, true, true, true}, true,
       false},
  };
  int wiring_index = 0;
  for (const GadgetWiring& w : wirings) {
    for (int i = 1; i <= 8; ++i) {
      edge(w.gd.star, w.gd.num[i], 1, w.star_spokes[i]);
    }
    edge(w.gd.num[3], w.gd.num[4], 1, w.chord34);
    edge(w.gd.num[7], w.gd.num[8], 1, w.chord78);
    const bool first = wiring_index == 0;
    edge(w.gd.num[1], w.pair_vertex, 1, true);
    edge(w.gd.num[2], w.pair_vertex, 1, first);
    edge(w.gd.num[6], w.target6, 1, first || wiring_index == 1);
    edge(w.gd.num[5], w.target5, 1, first || wiring_index == 2);
    ++wiring_index;
  }
  std::sort(cover.begin(), cover.end());
  return out;
}

}  // namespace votematch
