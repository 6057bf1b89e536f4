#include "votematch/blossom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

// Primal-dual blossom algorithm after Galil (1986), in the array formulation
// popularized by van Rantwijk's reference implementation. Node ids 0..n-1 are
// vertices, n..2n-1 are (recycled) nontrivial blossom slots. Vertex duals are
// premultiplied by 2 so all arithmetic stays in int64 for integer weights.

namespace votematch {

namespace {

[[noreturn]] void fail(const char* what) {
  throw std::logic_error(std::string("blossom matcher invariant violated: ") + what);
}

#define VM_CHECK(cond, what) \
  do {                       \
    if (!(cond)) fail(what); \
  } while (0)

// Oriented edge: v is the outer endpoint, w the inner one, id the edge index.
struct OEdge {
  int v = -1;
  int w = -1;
  int id = -1;
};

class Matcher {
 public:
  Matcher(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : n_(n), edges_(edges), maxcard_(max_cardinality) {
    adj_.resize(static_cast<size_t>(n_));
    pair_to_edge_.reserve(edges_.size() * 2);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
      const WeightedEdge& e = edges_[static_cast<size_t>(id)];
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
        throw std::invalid_argument("matching: edge endpoint out of range");
      }
      if (e.u == e.v) throw std::invalid_argument("matching: self-loop");
      if (!pair_to_edge_.emplace(pair_key(e.u, e.v), id).second) {
        throw std::invalid_argument("matching: repeated vertex pair (graph must be simple)");
      }
      adj_[static_cast<size_t>(e.u)].push_back(id);
      adj_[static_cast<size_t>(e.v)].push_back(id);
      if (e.weight > maxweight_) maxweight_ = e.weight;
    }
    int slots = 2 * n_;
    dualvar_.assign(static_cast<size_t>(slots), 0);
    for (int v = 0; v < n_; ++v) dualvar_[static_cast<size_t>(v)] = maxweight_;
    mate_.assign(static_cast<size_t>(n_), -1);
    label_.assign(static_cast<size_t>(slots), 0);
    labeledge_.assign(static_cast<size_t>(slots), OEdge{});
    inblossom_.resize(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) inblossom_[static_cast<size_t>(v)] = v;
    parent_.assign(static_cast<size_t>(slots), -1);
    base_.assign(static_cast<size_t>(slots), -1);
    for (int v = 0; v < n_; ++v) base_[static_cast<size_t>(v)] = v;
    childs_.resize(static_cast<size_t>(slots));
    bedges_.resize(static_cast<size_t>(slots));
    bestedge_.assign(static_cast<size_t>(slots), -1);
    bestedges_.resize(static_cast<size_t>(slots));
    have_bestedges_.assign(static_cast<size_t>(slots), 0);
    for (int b = 2 * n_ - 1; b >= n_; --b) unused_.push_back(b);
    allowed_.assign(edges_.size(), 0);
  }

  std::vector<int> run() {
    if (n_ == 0 || edges_.empty()) return mate_;
    while (true) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(labeledge_.begin(), labeledge_.end(), OEdge{});
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) {
        have_bestedges_[static_cast<size_t>(b)] = 0;
        bestedges_[static_cast<size_t>(b)].clear();
      }
      std::fill(allowed_.begin(), allowed_.end(), 0);
      queue_.clear();
      for (int v = 0; v < n_; ++v) {
        if (mate_[static_cast<size_t>(v)] < 0 && label_at(inblossom_[static_cast<size_t>(v)]) == 0) {
          assign_label(v, 1, -1, -1);
        }
      }
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          VM_CHECK(label_at(inblossom_[static_cast<size_t>(v)]) == 1, "queued vertex not S");
          for (int id : adj_[static_cast<size_t>(v)]) {
            int w = other(id, v);
            int bv = inblossom_[static_cast<size_t>(v)];
            int bw = inblossom_[static_cast<size_t>(w)];
            if (bv == bw) continue;  // internal to a blossom
            Weight kslack = 0;
            if (!allowed_[static_cast<size_t>(id)]) {
              kslack = slack(id);
              if (kslack <= 0) allowed_[static_cast<size_t>(id)] = 1;
            }
            if (allowed_[static_cast<size_t>(id)]) {
              if (label_at(bw) == 0) {
                // free vertex: becomes T, its mate becomes S
                assign_label(w, 2, v, id);
              } else if (label_at(bw) == 1) {
                // S-to-S edge: new blossom or augmenting path
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, OEdge{v, w, id});
                } else {
                  augment_matching(v, w);
                  augmented = true;
                  break;
                }
              } else if (label_at(w) == 0) {
                // unreached vertex inside a T-blossom
                VM_CHECK(label_at(bw) == 2, "expected T-blossom");
                label_[static_cast<size_t>(w)] = 2;
                labeledge_[static_cast<size_t>(w)] = OEdge{v, w, id};
              }
            } else if (label_at(bw) == 1) {
              if (bestedge_[static_cast<size_t>(bv)] < 0 ||
                  kslack < slack(bestedge_[static_cast<size_t>(bv)])) {
                bestedge_[static_cast<size_t>(bv)] = id;
              }
            } else if (label_at(w) == 0) {
              if (bestedge_[static_cast<size_t>(w)] < 0 ||
                  kslack < slack(bestedge_[static_cast<size_t>(w)])) {
                bestedge_[static_cast<size_t>(w)] = id;
              }
            }
          }
        }
        if (augmented) break;

        // No augmenting path yet: pump slack out of the dual variables.
        int deltatype = -1;
        Weight delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;
        if (!maxcard_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
        }
        for (int v = 0; v < n_; ++v) {
          if (label_at(inblossom_[static_cast<size_t>(v)]) == 0 &&
              bestedge_[static_cast<size_t>(v)] >= 0) {
            Weight d = slack(bestedge_[static_cast<size_t>(v)]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[static_cast<size_t>(v)];
            }
          }
        }
        for (int b = 0; b < 2 * n_; ++b) {
          if (!alive(b)) continue;
          if (parent_[static_cast<size_t>(b)] < 0 && label_at(b) == 1 &&
              bestedge_[static_cast<size_t>(b)] >= 0) {
            Weight kslack = slack(bestedge_[static_cast<size_t>(b)]);
            VM_CHECK((kslack & 1) == 0, "odd S-to-S slack");
            Weight d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[static_cast<size_t>(b)];
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (!alive(b)) continue;
          if (parent_[static_cast<size_t>(b)] < 0 && label_at(b) == 2 &&
              (deltatype == -1 || dualvar_[static_cast<size_t>(b)] < delta)) {
            delta = dualvar_[static_cast<size_t>(b)];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          // Max-cardinality optimum reached; final update keeps the
          // certificate verifiable.
          VM_CHECK(maxcard_, "stuck without max-cardinality mode");
          deltatype = 1;
          delta = std::max<Weight>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
        }

        for (int v = 0; v < n_; ++v) {
          int lbl = label_at(inblossom_[static_cast<size_t>(v)]);
          if (lbl == 1) {
            dualvar_[static_cast<size_t>(v)] -= delta;
          } else if (lbl == 2) {
            dualvar_[static_cast<size_t>(v)] += delta;
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (!alive(b) || parent_[static_cast<size_t>(b)] >= 0) continue;
          if (label_at(b) == 1) {
            dualvar_[static_cast<size_t>(b)] += delta;
          } else if (label_at(b) == 2) {
            dualvar_[static_cast<size_t>(b)] -= delta;
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowed_[static_cast<size_t>(deltaedge)] = 1;
          queue_.push_back(s_side(deltaedge));
        } else if (deltatype == 3) {
          allowed_[static_cast<size_t>(deltaedge)] = 1;
          queue_.push_back(s_side(deltaedge));
        } else if (deltatype == 4) {
          expand_blossom(deltablossom, false);
        }
      }

      for (int v = 0; v < n_; ++v) {
        if (mate_[static_cast<size_t>(v)] >= 0) {
          VM_CHECK(mate_[static_cast<size_t>(mate_[static_cast<size_t>(v)])] == v,
                   "asymmetric mate");
        }
      }
      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (!alive(b)) continue;
        if (parent_[static_cast<size_t>(b)] < 0 && label_at(b) == 1 &&
            dualvar_[static_cast<size_t>(b)] == 0) {
          expand_blossom(b, true);
        }
      }
    }
    verify_optimum();
    return mate_;
  }

 private:
  long long pair_key(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n_ + v;
  }

  int edge_between(int u, int v) const {
    auto it = pair_to_edge_.find(pair_key(u, v));
    VM_CHECK(it != pair_to_edge_.end(), "missing edge between matched pair");
    return it->second;
  }

  int other(int id, int v) const {
    const WeightedEdge& e = edges_[static_cast<size_t>(id)];
    return e.u == v ? e.v : e.u;
  }

  bool alive(int b) const { return b < n_ || base_[static_cast<size_t>(b)] >= 0; }

  int label_at(int b) const { return label_[static_cast<size_t>(b)]; }

  Weight slack(int id) const {
    const WeightedEdge& e = edges_[static_cast<size_t>(id)];
    return dualvar_[static_cast<size_t>(e.u)] + dualvar_[static_cast<size_t>(e.v)] - 2 * e.weight;
  }

  void collect_leaves(int b, std::vector<int>& out) const {
    std::vector<int> stack;
    stack.push_back(b);
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      if (t < n_) {
        out.push_back(t);
      } else {
        for (int c : childs_[static_cast<size_t>(t)]) stack.push_back(c);
      }
    }
  }

  static int wrap(int j, int len) {
    int r = j % len;
    return r < 0 ? r + len : r;
  }

  int child_at(int b, int j) const {
    const auto& c = childs_[static_cast<size_t>(b)];
    return c[static_cast<size_t>(wrap(j, static_cast<int>(c.size())))];
  }

  const OEdge& bedge_at(int b, int j) const {
    const auto& e = bedges_[static_cast<size_t>(b)];
    return e[static_cast<size_t>(wrap(j, static_cast<int>(e.size())))];
  }

  // Which endpoint of an allowed delta edge should seed the scan queue.
  int s_side(int id) const {
    const WeightedEdge& e = edges_[static_cast<size_t>(id)];
    if (label_at(inblossom_[static_cast<size_t>(e.u)]) == 1) return e.u;
    VM_CHECK(label_at(inblossom_[static_cast<size_t>(e.v)]) == 1, "delta edge without S side");
    return e.v;
  }

  void assign_label(int w, int t, int v, int id) {
    int b = inblossom_[static_cast<size_t>(w)];
    VM_CHECK(label_at(w) == 0 && label_at(b) == 0, "relabeling a labeled node");
    label_[static_cast<size_t>(w)] = label_[static_cast<size_t>(b)] = t;
    if (v >= 0) {
      if (id < 0) id = edge_between(v, w);
      labeledge_[static_cast<size_t>(w)] = labeledge_[static_cast<size_t>(b)] = OEdge{v, w, id};
    } else {
      labeledge_[static_cast<size_t>(w)] = labeledge_[static_cast<size_t>(b)] = OEdge{};
    }
    bestedge_[static_cast<size_t>(w)] = bestedge_[static_cast<size_t>(b)] = -1;
    if (t == 1) {
      if (b >= n_) {
        collect_leaves(b, queue_);
      } else {
        queue_.push_back(b);
      }
    } else if (t == 2) {
      int bs = base_[static_cast<size_t>(b)];
      VM_CHECK(mate_[static_cast<size_t>(bs)] >= 0, "T-blossom base unmatched");
      assign_label(mate_[static_cast<size_t>(bs)], 1, bs, -1);
    }
  }

  // Trace back from v and w; returns the base of a discovered blossom, or -1
  // if the paths end in different roots (an augmenting path exists).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int found_base = -1;
    while (v >= 0) {
      int b = inblossom_[static_cast<size_t>(v)];
      if (label_at(b) & 4) {
        found_base = base_[static_cast<size_t>(b)];
        break;
      }
      VM_CHECK(label_at(b) == 1, "trace through non-S node");
      path.push_back(b);
      label_[static_cast<size_t>(b)] = 5;
      if (labeledge_[static_cast<size_t>(b)].id < 0) {
        VM_CHECK(mate_[static_cast<size_t>(base_[static_cast<size_t>(b)])] < 0,
                 "rootless labeled blossom with matched base");
        v = -1;
      } else {
        VM_CHECK(labeledge_[static_cast<size_t>(b)].v ==
                     mate_[static_cast<size_t>(base_[static_cast<size_t>(b)])],
                 "S label not via mate");
        v = labeledge_[static_cast<size_t>(b)].v;
        b = inblossom_[static_cast<size_t>(v)];
        VM_CHECK(label_at(b) == 2, "expected T node on trace");
        v = labeledge_[static_cast<size_t>(b)].v;
      }
      if (w >= 0) std::swap(v, w);
    }
    for (int b : path) label_[static_cast<size_t>(b)] = 1;
    return found_base;
  }

  void add_blossom(int base, OEdge edge) {
    int v = edge.v;
    int w = edge.w;
    int bb = inblossom_[static_cast<size_t>(base)];
    int bv = inblossom_[static_cast<size_t>(v)];
    int bw = inblossom_[static_cast<size_t>(w)];
    VM_CHECK(!unused_.empty(), "out of blossom slots");
    int b = unused_.back();
    unused_.pop_back();
    base_[static_cast<size_t>(b)] = base;
    parent_[static_cast<size_t>(b)] = -1;
    parent_[static_cast<size_t>(bb)] = b;
    auto& path = childs_[static_cast<size_t>(b)];
    auto& edgs = bedges_[static_cast<size_t>(b)];
    path.clear();
    edgs.clear();
    edgs.push_back(edge);
    while (bv != bb) {
      parent_[static_cast<size_t>(bv)] = b;
      path.push_back(bv);
      edgs.push_back(labeledge_[static_cast<size_t>(bv)]);
      VM_CHECK(label_at(bv) == 2 ||
                   (label_at(bv) == 1 &&
                    labeledge_[static_cast<size_t>(bv)].v ==
                        mate_[static_cast<size_t>(base_[static_cast<size_t>(bv)])]),
               "bad node on blossom path");
      v = labeledge_[static_cast<size_t>(bv)].v;
      bv = inblossom_[static_cast<size_t>(v)];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(edgs.begin(), edgs.end());
    while (bw != bb) {
      parent_[static_cast<size_t>(bw)] = b;
      path.push_back(bw);
      const OEdge& le = labeledge_[static_cast<size_t>(bw)];
      edgs.push_back(OEdge{le.w, le.v, le.id});
      VM_CHECK(label_at(bw) == 2 ||
                   (label_at(bw) == 1 &&
                    labeledge_[static_cast<size_t>(bw)].v ==
                        mate_[static_cast<size_t>(base_[static_cast<size_t>(bw)])]),
               "bad node on blossom path");
      w = labeledge_[static_cast<size_t>(bw)].v;
      bw = inblossom_[static_cast<size_t>(w)];
    }
    VM_CHECK(label_at(bb) == 1, "blossom base not S");
    label_[static_cast<size_t>(b)] = 1;
    labeledge_[static_cast<size_t>(b)] = labeledge_[static_cast<size_t>(bb)];
    dualvar_[static_cast<size_t>(b)] = 0;
    std::vector<int> leaves;
    collect_leaves(b, leaves);
    for (int lv : leaves) {
      if (label_at(inblossom_[static_cast<size_t>(lv)]) == 2) queue_.push_back(lv);
      inblossom_[static_cast<size_t>(lv)] = b;
    }
    // Least-slack edges from the merged children toward other S-blossoms.
    std::map<int, int> bestedgeto;
    std::vector<int> nblist;
    for (int cv : path) {
      nblist.clear();
      if (cv >= n_) {
        if (have_bestedges_[static_cast<size_t>(cv)]) {
          nblist = std::move(bestedges_[static_cast<size_t>(cv)]);
          bestedges_[static_cast<size_t>(cv)].clear();
          have_bestedges_[static_cast<size_t>(cv)] = 0;
        } else {
          std::vector<int> sub;
          collect_leaves(cv, sub);
          for (int lv : sub) {
            for (int id : adj_[static_cast<size_t>(lv)]) nblist.push_back(id);
          }
        }
      } else {
        nblist = adj_[static_cast<size_t>(cv)];
      }
      for (int id : nblist) {
        int j = edges_[static_cast<size_t>(id)].v;
        if (inblossom_[static_cast<size_t>(j)] == b) j = edges_[static_cast<size_t>(id)].u;
        int bj = inblossom_[static_cast<size_t>(j)];
        if (bj != b && label_at(bj) == 1) {
          auto it = bestedgeto.find(bj);
          if (it == bestedgeto.end() || slack(id) < slack(it->second)) bestedgeto[bj] = id;
        }
      }
      bestedge_[static_cast<size_t>(cv)] = -1;
    }
    auto& mine = bestedges_[static_cast<size_t>(b)];
    mine.clear();
    for (const auto& [bj, id] : bestedgeto) mine.push_back(id);
    have_bestedges_[static_cast<size_t>(b)] = 1;
    int best = -1;
    for (int id : mine) {
      if (best < 0 || slack(id) < slack(best)) best = id;
    }
    bestedge_[static_cast<size_t>(b)] = best;
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : childs_[static_cast<size_t>(b)]) {
      parent_[static_cast<size_t>(s)] = -1;
      if (s < n_) {
        inblossom_[static_cast<size_t>(s)] = s;
      } else if (endstage && dualvar_[static_cast<size_t>(s)] == 0) {
        expand_blossom(s, true);
      } else {
        std::vector<int> leaves;
        collect_leaves(s, leaves);
        for (int lv : leaves) inblossom_[static_cast<size_t>(lv)] = s;
      }
    }
    if (!endstage && label_at(b) == 2) {
      // Mid-stage expansion of a T-blossom: relabel the even-length side of
      // the blossom path and keep the rest reachable.
      int entrychild = inblossom_[static_cast<size_t>(labeledge_[static_cast<size_t>(b)].w)];
      auto& kids = childs_[static_cast<size_t>(b)];
      int len = static_cast<int>(kids.size());
      int j = static_cast<int>(std::find(kids.begin(), kids.end(), entrychild) - kids.begin());
      int jstep;
      if (j & 1) {
        j -= len;
        jstep = 1;
      } else {
        jstep = -1;
      }
      OEdge cur = labeledge_[static_cast<size_t>(b)];
      while (j != 0) {
        int p, q, pq_id;
        if (jstep == 1) {
          const OEdge& e = bedge_at(b, j);
          p = e.v;
          q = e.w;
          pq_id = e.id;
        } else {
          const OEdge& e = bedge_at(b, j - 1);
          q = e.v;
          p = e.w;
          pq_id = e.id;
        }
        label_[static_cast<size_t>(cur.w)] = 0;
        label_[static_cast<size_t>(q)] = 0;
        assign_label(cur.w, 2, cur.v, cur.id);
        allowed_[static_cast<size_t>(pq_id)] = 1;
        j += jstep;
        if (jstep == 1) {
          const OEdge& e = bedge_at(b, j);
          cur = e;
        } else {
          const OEdge& e = bedge_at(b, j - 1);
          cur = OEdge{e.w, e.v, e.id};
        }
        allowed_[static_cast<size_t>(cur.id)] = 1;
        j += jstep;
      }
      int bw = child_at(b, j);
      label_[static_cast<size_t>(cur.w)] = 2;
      label_[static_cast<size_t>(bw)] = 2;
      labeledge_[static_cast<size_t>(cur.w)] = cur;
      labeledge_[static_cast<size_t>(bw)] = cur;
      bestedge_[static_cast<size_t>(bw)] = -1;
      j += jstep;
      while (child_at(b, j) != entrychild) {
        int bv = child_at(b, j);
        if (label_at(bv) == 1) {
          j += jstep;
          continue;
        }
        int vv = -1;
        if (bv >= n_) {
          std::vector<int> leaves;
          collect_leaves(bv, leaves);
          for (int lv : leaves) {
            if (label_at(lv) != 0) {
              vv = lv;
              break;
            }
          }
        } else {
          vv = bv;
        }
        if (vv >= 0 && label_at(vv) != 0) {
          VM_CHECK(label_at(vv) == 2, "expected reached T-vertex");
          VM_CHECK(inblossom_[static_cast<size_t>(vv)] == bv, "vertex escaped its blossom");
          label_[static_cast<size_t>(vv)] = 0;
          label_[static_cast<size_t>(
              mate_[static_cast<size_t>(base_[static_cast<size_t>(bv)])])] = 0;
          assign_label(vv, 2, labeledge_[static_cast<size_t>(vv)].v,
                       labeledge_[static_cast<size_t>(vv)].id);
        }
        j += jstep;
      }
    }
    label_[static_cast<size_t>(b)] = 0;
    labeledge_[static_cast<size_t>(b)] = OEdge{};
    bestedge_[static_cast<size_t>(b)] = -1;
    parent_[static_cast<size_t>(b)] = -1;
    base_[static_cast<size_t>(b)] = -1;
    dualvar_[static_cast<size_t>(b)] = 0;
    have_bestedges_[static_cast<size_t>(b)] = 0;
    bestedges_[static_cast<size_t>(b)].clear();
    childs_[static_cast<size_t>(b)].clear();
    bedges_[static_cast<size_t>(b)].clear();
    unused_.push_back(b);
  }

  // Swap matched/unmatched edges along the path from v down to b's base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (parent_[static_cast<size_t>(t)] != b) t = parent_[static_cast<size_t>(t)];
    if (t >= n_) augment_blossom(t, v);
    auto& kids = childs_[static_cast<size_t>(b)];
    int len = static_cast<int>(kids.size());
    int i = static_cast<int>(std::find(kids.begin(), kids.end(), t) - kids.begin());
    int j = i;
    int jstep;
    if (i & 1) {
      j -= len;
      jstep = 1;
    } else {
      jstep = -1;
    }
    while (j != 0) {
      j += jstep;
      int tt = child_at(b, j);
      const OEdge& e = jstep == 1 ? bedge_at(b, j) : bedge_at(b, j - 1);
      int w = jstep == 1 ? e.v : e.w;
      int x = jstep == 1 ? e.w : e.v;
      if (tt >= n_) augment_blossom(tt, w);
      j += jstep;
      tt = child_at(b, j);
      if (tt >= n_) augment_blossom(tt, x);
      mate_[static_cast<size_t>(w)] = x;
      mate_[static_cast<size_t>(x)] = w;
    }
    std::rotate(kids.begin(), kids.begin() + i, kids.end());
    auto& edgs = bedges_[static_cast<size_t>(b)];
    std::rotate(edgs.begin(), edgs.begin() + i, edgs.end());
    base_[static_cast<size_t>(b)] = base_[static_cast<size_t>(kids.front())];
    VM_CHECK(base_[static_cast<size_t>(b)] == v, "blossom base after augment");
  }

  void augment_matching(int v, int w) {
    const std::pair<int, int> sides[2] = {{v, w}, {w, v}};
    for (const auto& [s0, j0] : sides) {
      int s = s0;
      int j = j0;
      while (true) {
        int bs = inblossom_[static_cast<size_t>(s)];
        VM_CHECK(label_at(bs) == 1, "augmenting through non-S node");
        const OEdge& le = labeledge_[static_cast<size_t>(bs)];
        if (le.id < 0) {
          VM_CHECK(mate_[static_cast<size_t>(base_[static_cast<size_t>(bs)])] < 0,
                   "root blossom with matched base");
        } else {
          VM_CHECK(le.v == mate_[static_cast<size_t>(base_[static_cast<size_t>(bs)])],
                   "S label not via mate on augment");
        }
        if (bs >= n_) augment_blossom(bs, s);
        mate_[static_cast<size_t>(s)] = j;
        if (labeledge_[static_cast<size_t>(bs)].id < 0) break;
        int t = labeledge_[static_cast<size_t>(bs)].v;
        int bt = inblossom_[static_cast<size_t>(t)];
        VM_CHECK(label_at(bt) == 2, "expected T node on augment");
        s = labeledge_[static_cast<size_t>(bt)].v;
        j = labeledge_[static_cast<size_t>(bt)].w;
        VM_CHECK(base_[static_cast<size_t>(bt)] == t, "T blossom base mismatch");
        if (bt >= n_) augment_blossom(bt, j);
        mate_[static_cast<size_t>(j)] = s;
      }
    }
  }

  // Complementary slackness audit of the final primal/dual pair.
  void verify_optimum() const {
    Weight vdualoffset = 0;
    Weight minvdual = 0;
    if (n_ > 0) minvdual = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
    if (maxcard_) vdualoffset = std::max<Weight>(0, -minvdual);
    VM_CHECK(minvdual + vdualoffset >= 0, "negative vertex dual");
    for (int b = n_; b < 2 * n_; ++b) {
      if (alive(b)) VM_CHECK(dualvar_[static_cast<size_t>(b)] >= 0, "negative blossom dual");
    }
    std::vector<int> iblossoms, jblossoms;
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
      const WeightedEdge& e = edges_[static_cast<size_t>(id)];
      Weight s = dualvar_[static_cast<size_t>(e.u)] + dualvar_[static_cast<size_t>(e.v)] -
                 2 * e.weight;
      iblossoms.assign(1, e.u);
      jblossoms.assign(1, e.v);
      while (parent_[static_cast<size_t>(iblossoms.back())] >= 0) {
        iblossoms.push_back(parent_[static_cast<size_t>(iblossoms.back())]);
      }
      while (parent_[static_cast<size_t>(jblossoms.back())] >= 0) {
        jblossoms.push_back(parent_[static_cast<size_t>(jblossoms.back())]);
      }
      std::reverse(iblossoms.begin(), iblossoms.end());
      std::reverse(jblossoms.begin(), jblossoms.end());
      size_t depth = std::min(iblossoms.size(), jblossoms.size());
      for (size_t d = 0; d < depth; ++d) {
        if (iblossoms[d] != jblossoms[d]) break;
        s += 2 * dualvar_[static_cast<size_t>(iblossoms[d])];
      }
      VM_CHECK(s >= 0, "negative edge slack");
      if (mate_[static_cast<size_t>(e.u)] == e.v) {
        VM_CHECK(mate_[static_cast<size_t>(e.v)] == e.u, "asymmetric matched edge");
        VM_CHECK(s == 0, "matched edge with positive slack");
      }
    }
    for (int v = 0; v < n_; ++v) {
      VM_CHECK(mate_[static_cast<size_t>(v)] >= 0 ||
                   dualvar_[static_cast<size_t>(v)] + vdualoffset == 0,
               "single vertex with positive dual");
    }
    for (int b = n_; b < 2 * n_; ++b) {
      if (!alive(b) || dualvar_[static_cast<size_t>(b)] <= 0) continue;
      const auto& edgs = bedges_[static_cast<size_t>(b)];
      VM_CHECK(edgs.size() % 2 == 1, "even blossom with positive dual");
      for (size_t i = 1; i < edgs.size(); i += 2) {
        VM_CHECK(mate_[static_cast<size_t>(edgs[i].v)] == edgs[i].w &&
                     mate_[static_cast<size_t>(edgs[i].w)] == edgs[i].v,
                 "positive-dual blossom not full");
      }
    }
  }

  int n_;
  const std::vector<WeightedEdge>& edges_;
  bool maxcard_;
  Weight maxweight_ = 0;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<long long, int> pair_to_edge_;
  std::vector<Weight> dualvar_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<OEdge> labeledge_;
  std::vector<int> inblossom_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<std::vector<int>> childs_;
  std::vector<std::vector<OEdge>> bedges_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> bestedges_;
  std::vector<char> have_bestedges_;
  std::vector<int> unused_;
  std::vector<char> allowed_;
  std::vector<int> queue_;
};

#undef VM_CHECK

}  // namespace

std::vector<int> max_weight_matching(int n, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality) {
  if (n < 0) throw std::invalid_argument("matching: negative vertex count");
  Matcher matcher(n, edges, max_cardinality);
  return matcher.run();
}

std::optional<SimpleMatching> max_weight_perfect_matching(
    int n, const std::vector<WeightedEdge>& edges) {
  if (n % 2 != 0) return std::nullopt;
  std::vector<int> mate = max_weight_matching(n, edges, true);
  for (int v = 0; v < n; ++v) {
    if (mate[static_cast<size_t>(v)] < 0) return std::nullopt;
  }
  std::unordered_map<long long, int> pair_to_edge;
  pair_to_edge.reserve(edges.size() * 2);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    const WeightedEdge& e = edges[static_cast<size_t>(id)];
    long long key = static_cast<long long>(std::min(e.u, e.v)) * n + std::max(e.u, e.v);
    pair_to_edge.emplace(key, id);
  }
  SimpleMatching result;
  for (int v = 0; v < n; ++v) {
    int w = mate[static_cast<size_t>(v)];
    if (v < w) {
      long long key = static_cast<long long>(v) * n + w;
      auto it = pair_to_edge.find(key);
      if (it == pair_to_edge.end()) {
        throw std::logic_error("matched pair is not a graph edge");
      }
      result.selected.push_back(it->second);
      result.total_weight += edges[static_cast<size_t>(it->second)].weight;
    }
  }
  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

}  // namespace votematch
