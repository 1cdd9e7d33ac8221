#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "emw/error.hpp"
#include "emw/matching.hpp"

namespace emw {

namespace {

/// Lowest-id edge between each matched pair.
Matching edges_of_mates(const AbstractGraph& g, const std::vector<VertexId>& mate) {
  Matching m;
  std::vector<char> taken(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (u != v && mate[u] == v && !taken[u]) {
      taken[u] = taken[v] = 1;
      m.edges.push_back(e);
    }
  }
  return m;
}

class Blossom {
 public:
  explicit Blossom(const AbstractGraph& g) : n_(g.num_vertices()), adj_(n_), mate_(n_, kNone) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.edge(e);
      if (u == v) continue;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    // greedy start
    for (VertexId u = 0; u < n_; ++u) {
      if (mate_[u] != kNone) continue;
      for (VertexId v : adj_[u]) {
        if (mate_[v] == kNone) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
  }

  std::vector<VertexId> run() {
    for (VertexId v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      VertexId end = find_path(v);
      while (end != kNone) {
        const VertexId pv = parent_[end];
        const VertexId ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return mate_;
  }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<char> used(n_, 0);
    while (true) {
      a = base_[a];
      used[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (used[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    used_.assign(n_, 0);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<VertexId> q{root};
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop_front();
      for (VertexId to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const VertexId cur = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = 1;
          q.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  int n_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_min_degree_two(const PlaneGraph& g) {
  if (g.has_self_loops()) throw Error(ErrorCode::kSelfLoopInput, "matching construction");
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnectedInput, "matching construction");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2) {
      throw Error(ErrorCode::kPreconditionViolated, "vertex " + std::to_string(v) + " has degree below 2");
    }
  }
}

/// Adds, while some vertex v still has degree 2, a vertex w adjacent to v and
/// both of v's neighbours, drawn in the face clockwise after v's first dart.
PlaneGraph augment_degree_two(const PlaneGraph& g) {
  const int n0 = g.num_vertices();
  std::vector<std::vector<DartId>> rot(n0);
  for (VertexId v = 0; v < n0; ++v) rot[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  int m = g.num_edges();
  auto position = [&](VertexId at, DartId d) {
    auto& l = rot[at];
    return std::find(l.begin(), l.end(), d);
  };
  for (VertexId v = 0; v < n0; ++v) {
    // earlier additions may already have lifted v to degree 3
    if (rot[v].size() != 2) continue;
    const DartId d0 = rot[v][0];
    const DartId d1 = rot[v][1];
    const VertexId x = g.head(d0), y = g.head(d1);
    const EdgeId ev = m++, ex = m++, ey = m++;
    // dart 2e leaves w, 2e+1 enters w; the face x -> v -> y splits into
    // x v w, v y w and the rest
    rot[v].insert(position(v, d0) + 1, 2 * ev + 1);
    rot[x].insert(position(x, PlaneGraph::twin(d0)), 2 * ex + 1);
    rot[y].insert(position(y, PlaneGraph::twin(d1)) + 1, 2 * ey + 1);
    rot.push_back({2 * ev, 2 * ex, 2 * ey});
  }
  return PlaneGraph::from_rotation(static_cast<int>(rot.size()), m, rot);
}

/// Alternate edges along every path and cycle of a max-degree-2 edge set.
Matching alternate_along(const AbstractGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<std::vector<EdgeId>> inc(g.num_vertices());
  for (EdgeId e : edges) {
    inc[g.edge(e).first].push_back(e);
    inc[g.edge(e).second].push_back(e);
  }
  std::vector<char> used_edge(g.num_edges(), 0), matched(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  Matching m;
  auto walk = [&](VertexId start) {
    VertexId v = start;
    seen[v] = 1;
    while (true) {
      EdgeId next = kNone;
      for (EdgeId e : inc[v]) {
        if (!used_edge[e]) {
          next = e;
          break;
        }
      }
      if (next == kNone) return;
      used_edge[next] = 1;
      const VertexId w = g.other(next, v);
      if (!matched[v] && !matched[w]) {
        matched[v] = matched[w] = 1;
        m.edges.push_back(next);
      }
      v = w;
      seen[v] = 1;
    }
  };
  // paths from their ends first, then what is left are cycles
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (inc[v].size() == 1 && !seen[v]) walk(v);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!inc[v].empty() && !seen[v]) walk(v);
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

struct Components {
  std::vector<int> of;
  int count = 0;
};

Components components(const AbstractGraph& g) {
  Components c;
  c.of.assign(g.num_vertices(), -1);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (c.of[s] >= 0) continue;
    std::vector<VertexId> stack{s};
    c.of[s] = c.count;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.other(e, v);
        if (c.of[w] < 0) {
          c.of[w] = c.count;
          stack.push_back(w);
        }
      }
    }
    ++c.count;
  }
  return c;
}

/// Orientation of every component; the forward flags follow g's edge ids.
Orientation orient_components(const AbstractGraph& g) {
  const int n = g.num_vertices();
  Orientation out;
  out.forward.assign(g.num_edges(), true);

  // bridges by low-link over an iterative DFS that skips only the parent edge
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> bridge(g.num_edges(), 0);
  int timer = 0;
  auto dfs_bridges = [&](VertexId root) {
    struct Frame {
      VertexId v;
      EdgeId via;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const VertexId w = g.other(e, f.v);
        if (w == f.v) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) bridge[done.via] = 1;
        }
      }
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs_bridges(v);
  }

  // root of each component: lowest vertex on a non-bridge edge, if any
  const Components comp = components(g);
  std::vector<VertexId> root(comp.count, kNone);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (u == v || bridge[e]) continue;
    VertexId& r = root[comp.of[u]];
    if (r == kNone || std::min(u, v) < r) r = std::min(u, v);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (root[comp.of[v]] == kNone) root[comp.of[v]] = v;
  }

  // orienting DFS: tree edges down, back edges up, bridges towards the root
  std::vector<char> visited(n, 0), edge_done(g.num_edges(), 0);
  auto orient = [&](EdgeId e, VertexId from) { out.forward[e] = g.edge(e).first == from; };
  for (int c = 0; c < comp.count; ++c) {
    struct Frame {
      VertexId v;
      std::size_t next;
    };
    std::vector<Frame> stack{{root[c], 0}};
    visited[root[c]] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next >= inc.size()) {
        stack.pop_back();
        continue;
      }
      const EdgeId e = inc[f.next++];
      if (edge_done[e]) continue;
      edge_done[e] = 1;
      const VertexId w = g.other(e, f.v);
      if (w == f.v) continue;  // a loop counts as leaving v either way
      if (!visited[w]) {
        visited[w] = 1;
        orient(e, bridge[e] ? w : f.v);
        stack.push_back({w, 0});
      } else {
        orient(e, f.v);  // w is an ancestor: back edge goes up
      }
    }
  }

  std::vector<int> outdeg(n, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    ++outdeg[out.forward[e] ? u : v];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (outdeg[v] == 0) out.sinks.push_back(v);
  }
  return out;
}

}  // namespace

Matching maximum_matching(const AbstractGraph& g) {
  Blossom b(g);
  return edges_of_mates(g, b.run());
}

Matching greedy_maximal_matching(const AbstractGraph& g) {
  std::vector<char> used(g.num_vertices(), 0);
  Matching m;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (u == v || used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    m.edges.push_back(e);
  }
  return m;
}

Matching greedy_maximal_matching(const PlaneGraph& g) { return greedy_maximal_matching(g.underlying()); }

Orientation orient_one_sink(const AbstractGraph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnectedInput, "orient_one_sink");
  return orient_components(g);
}

MatchingResult matching_no_r_family(const PlaneGraph& g, int r) {
  if (r < 3) throw Error(ErrorCode::kPreconditionViolated, "r must be at least 3");
  require_min_degree_two(g);
  if (!find_r_families(g, r).empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "graph has a " + std::to_string(r) + "-family");
  }
  const int n = g.num_vertices();
  const AbstractGraph ug = g.underlying();
  MatchingResult out;
  auto& tr = out.trace;
  tr.n = n;

  std::vector<char> deg2(n, 0);
  int d2 = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 2) {
      deg2[v] = 1;
      ++d2;
    }
  }
  tr.c = n ? static_cast<double>(d2) / n : 0.0;

  if (static_cast<long long>(d2) * (4 * r - 1) <= static_cast<long long>(2 * r - 1) * n) {
    tr.case_tag = "1";
    const PlaneGraph aug = augment_degree_two(g);
    tr.augmented_vertices = aug.num_vertices() - n;
    if (aug.num_vertices() < 10) {
      tr.fallback = true;
      out.matching = maximum_matching(ug);
    } else {
      const Matching big = maximum_matching(aug.underlying());
      tr.deg3_bound_checked = true;
      tr.deg3_bound_held = big.size() >= ceil_div(aug.num_vertices() + 2, 3);
      // augmented edges come after g's, so the ids carry over
      for (EdgeId e : big.edges) {
        if (e < g.num_edges()) out.matching.edges.push_back(e);
      }
    }
  } else {
    std::vector<char> lonely(n, 0), social(n, 0);
    int social_count = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!deg2[v]) continue;
      bool all2 = true;
      for (DartId d : g.rotation(v)) all2 = all2 && deg2[g.head(d)];
      (all2 ? lonely : social)[v] = 1;
      social_count += !all2;
    }
    tr.q = d2 ? static_cast<double>(social_count) / d2 : 0.0;
    if (static_cast<long long>(social_count) * (2 * r - 1) <= static_cast<long long>(2 * r - 2) * d2) {
      tr.case_tag = "2a";
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (lonely[u] || lonely[v]) tr.lonely_edges.push_back(e);
      }
      out.matching = alternate_along(ug, tr.lonely_edges);
    } else {
      tr.case_tag = "2b";
      std::vector<char> used(n, 0);
      // G[S] is a matching: a social vertex has at most one degree-2 neighbour
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (social[u] && social[v] && !used[u] && !used[v]) {
          used[u] = used[v] = 1;
          out.matching.edges.push_back(e);
          tr.t1 += 2;
        }
      }
      // F: one edge per isolated social vertex s, joining s's two neighbours
      std::vector<VertexId> fvertex_id(n, kNone);
      std::vector<VertexId> fvertex_of;
      auto fid = [&](VertexId v) {
        if (fvertex_id[v] == kNone) {
          fvertex_id[v] = static_cast<VertexId>(fvertex_of.size());
          fvertex_of.push_back(v);
        }
        return fvertex_id[v];
      };
      struct FEdge {
        VertexId x, y;  // host ids, x < y
        VertexId s;
        EdgeId sx, sy;  // host edges s-x and s-y
      };
      std::vector<FEdge> fedges;
      for (VertexId s = 0; s < n; ++s) {
        if (!social[s] || used[s]) continue;
        ++tr.t2;
        const DartId d0 = g.rotation(s)[0], d1 = g.rotation(s)[1];
        FEdge fe{g.head(d0), g.head(d1), s, PlaneGraph::edge_of(d0), PlaneGraph::edge_of(d1)};
        if (fe.x > fe.y) {
          std::swap(fe.x, fe.y);
          std::swap(fe.sx, fe.sy);
        }
        fid(fe.x);
        fid(fe.y);
        fedges.push_back(fe);
      }
      tr.f_edges = static_cast<int>(fedges.size());
      // simple version: keep the lowest social vertex per neighbour pair
      std::sort(fedges.begin(), fedges.end(), [](const FEdge& p, const FEdge& q) {
        return std::tie(p.x, p.y, p.s) < std::tie(q.x, q.y, q.s);
      });
      std::vector<FEdge> simple;
      for (const FEdge& fe : fedges) {
        if (fe.x == fe.y) continue;
        if (simple.empty() || simple.back().x != fe.x || simple.back().y != fe.y) simple.push_back(fe);
      }
      AbstractGraph fbar(static_cast<int>(fvertex_of.size()));
      for (const FEdge& fe : simple) {
        fbar.add_edge(fvertex_id[fe.x], fvertex_id[fe.y]);
        tr.fbar_edges.emplace_back(fe.x, fe.y);
      }
      tr.fbar_vertices = fbar.num_vertices();
      tr.fbar_edge_bound_held = static_cast<long long>(fbar.num_edges()) * (r - 1) >= tr.t2;
      tr.fbar_vertex_bound_held = static_cast<long long>(fbar.num_vertices()) * 3 * (r - 1) >= tr.t2;

      const Orientation orient = orient_components(fbar);
      // every non-sink takes its lowest-id outgoing edge
      std::vector<char> picked(fbar.num_vertices(), 0);
      for (EdgeId e = 0; e < fbar.num_edges(); ++e) {
        auto [fx, fy] = fbar.edge(e);
        const VertexId tail = orient.forward[e] ? fx : fy;
        if (picked[tail]) continue;
        picked[tail] = 1;
        const FEdge& fe = simple[e];
        const VertexId host_tail = fvertex_of[tail];
        out.matching.edges.push_back(host_tail == fe.x ? fe.sx : fe.sy);
      }
      std::sort(out.matching.edges.begin(), out.matching.edges.end());
    }
  }

  if (out.matching.size() < ceil_div(n, 12 * r - 3) || !is_matching(ug, out.matching)) {
    tr.fallback = true;
    out.matching = maximum_matching(ug);
  }
  return out;
}

MatchingResult matching_no_nice_family(const PlaneGraph& g) {
  require_min_degree_two(g);
  const std::vector<RFamily> families = find_r_families(g, 3);
  for (const RFamily& f : families) {
    if (f.nicely_embedded) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "nicely embedded family on " + std::to_string(f.a) + "," + std::to_string(f.b));
    }
  }
  const int n = g.num_vertices();
  const AbstractGraph ug = g.underlying();
  MatchingResult out;
  auto& tr = out.trace;
  tr.n = n;
  for (const RFamily& f : families) {
    tr.p += f.r();
    tr.obstructions += static_cast<int>(f.obstructions.size());
  }

  if (37LL * tr.p >= 4LL * n) {
    tr.case_tag = "1";
    std::vector<char> used(n, 0), in_o(n, 0);
    for (const RFamily& f : families) {
      for (const auto& o : f.obstructions) {
        for (VertexId v : o) in_o[v] = 1;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          auto [u, v] = g.endpoints(e);
          if (u != v && in_o[u] && in_o[v] && !used[u] && !used[v]) {
            used[u] = used[v] = 1;
            out.matching.edges.push_back(e);
            ++tr.harvested;
            break;
          }
        }
        for (VertexId v : o) in_o[v] = 0;
      }
    }
    // extend to a maximal matching
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.endpoints(e);
      if (u != v && !used[u] && !used[v]) {
        used[u] = used[v] = 1;
        out.matching.edges.push_back(e);
      }
    }
    std::sort(out.matching.edges.begin(), out.matching.edges.end());
  } else {
    tr.case_tag = "2";
    std::vector<VertexId> removed;
    for (const RFamily& f : families) removed.insert(removed.end(), f.members.begin() + 2, f.members.end());
    const auto [trimmed, map] = delete_vertices(g, removed);
    std::vector<EdgeId> back(trimmed.num_edges(), kNone);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (map.edge_to_new[e] != kNone) back[map.edge_to_new[e]] = e;
    }
    Matching inner;
    try {
      MatchingResult sub = matching_no_r_family(trimmed, 3);
      inner = std::move(sub.matching);
      tr.inner.push_back(std::move(sub.trace));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPreconditionViolated) throw;
      tr.fallback = true;
      inner = maximum_matching(trimmed.underlying());
    }
    for (EdgeId e : inner.edges) out.matching.edges.push_back(back[e]);
    std::sort(out.matching.edges.begin(), out.matching.edges.end());
  }

  if (out.matching.size() < ceil_div(n, 37) || !is_matching(ug, out.matching)) {
    tr.fallback = true;
    out.matching = maximum_matching(ug);
  }
  return out;
}

}  // namespace emw
