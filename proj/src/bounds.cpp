#include "emw/bounds.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "emw/error.hpp"
#include "emw/treewidth.hpp"
#include "plane_graph_internal.hpp"

namespace emw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_connected(const PlaneGraph& g, const char* op) {
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnectedInput, op);
}

/// Replaces each weak-dual vertex in every bag by the boundary vertices of its
/// face, translated to the host graph through `to_host`.
TreeDecomposition expand_faces(const PlaneGraph& b, const WeakDual& wd, const TreeDecomposition& t,
                               const std::vector<std::vector<VertexId>>& to_host) {
  TreeDecomposition out;
  out.tree_edges = t.tree_edges;
  for (const auto& bag : t.bags) {
    std::vector<VertexId> vs;
    for (VertexId x : bag) {
      for (VertexId u : b.face(wd.vertex_to_face[x]).boundary_vertices) {
        vs.insert(vs.end(), to_host[u].begin(), to_host[u].end());
      }
    }
    out.add_node(std::move(vs));
  }
  return out;
}

}  // namespace

PseudoBlockDecomposition pseudo_block_decomposition(const PlaneGraph& g) {
  require_connected(g, "pseudo_block_decomposition");
  PseudoBlockDecomposition out;
  if (g.num_edges() == 0) return out;

  std::vector<int> outer_visits(g.num_vertices(), 0);
  for (DartId d : g.face(g.outer_face()).boundary_walk) ++outer_visits[g.origin(d)];

  UnionFind uf(g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (DartId d : g.rotation(v)) {
      const bool cut = outer_visits[v] > 1 && g.corner_face(d) == g.outer_face();
      if (!cut) uf.unite(PlaneGraph::edge_of(d), PlaneGraph::edge_of(g.rot_next(d)));
    }
  }

  std::vector<int> block_of_root(g.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int& b = block_of_root[uf.find(e)];
    if (b < 0) {
      b = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[b].edges.push_back(e);
    auto [u, v] = g.endpoints(e);
    out.blocks[b].vertices.push_back(u);
    out.blocks[b].vertices.push_back(v);
  }
  std::vector<std::vector<int>> blocks_at(g.num_vertices());
  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b) {
    auto& vs = out.blocks[b].vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (VertexId v : vs) blocks_at[v].push_back(b);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (blocks_at[v].size() > 1) out.cut_vertices.push_back(v);
  }

  // spanning structure: breadth-first from block 0 through shared vertices
  std::vector<char> placed(out.blocks.size(), 0);
  std::deque<int> queue{0};
  placed[0] = 1;
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (VertexId v : out.blocks[b].vertices) {
      for (int c : blocks_at[v]) {
        if (placed[c]) continue;
        placed[c] = 1;
        out.links.push_back({b, c, v});
        queue.push_back(c);
      }
    }
  }
  return out;
}

std::pair<PlaneGraph, GraphMap> block_graph(const PlaneGraph& g, const PseudoBlock& b) {
  std::vector<char> in_block(g.num_edges(), 0);
  for (EdgeId e : b.edges) in_block[e] = 1;
  GraphMap map;
  map.vertex_to_new.assign(g.num_vertices(), kNone);
  std::vector<std::vector<DartId>> rotation;
  for (VertexId v : b.vertices) {
    map.vertex_to_new[v] = static_cast<VertexId>(map.preimages.size());
    map.preimages.push_back({v});
    std::vector<DartId> r;
    for (DartId d : g.rotation(v)) {
      if (in_block[PlaneGraph::edge_of(d)]) r.push_back(d);
    }
    rotation.push_back(std::move(r));
  }
  std::optional<DartId> outer;
  for (DartId d : g.face(g.outer_face()).boundary_walk) {
    if (in_block[PlaneGraph::edge_of(d)]) {
      outer = d;
      break;
    }
  }
  auto rebuilt = detail::rebuild(g, rotation, outer);
  map.edge_to_new = std::move(rebuilt.edge_to_new);
  return {std::move(rebuilt.graph), std::move(map)};
}

UpperBound emw_upper_weak_dual(const PlaneGraph& g, BoundsOptions opt) {
  require_connected(g, "emw_upper_weak_dual");
  UpperBound out;
  if (g.num_edges() == 0) {
    std::vector<VertexId> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    if (!all.empty()) out.decomposition.add_node(all);
    return out;
  }

  const PseudoBlockDecomposition pbd = pseudo_block_decomposition(g);
  std::vector<TreeDecomposition> parts;
  for (const PseudoBlock& b : pbd.blocks) {
    if (b.single_edge()) {
      TreeDecomposition t;
      t.add_node(b.vertices);
      parts.push_back(std::move(t));
      continue;
    }
    const auto [bg, map] = block_graph(g, b);
    const WeakDual wd = weak_dual(bg);
    if (wd.graph.num_vertices() == 0) {
      TreeDecomposition t;
      t.add_node(b.vertices);
      parts.push_back(std::move(t));
      continue;
    }
    TreewidthResult r;
    if (wd.graph.num_vertices() <= opt.exact_cap) {
      r = exact_treewidth(wd.graph, SearchLimits{.vertex_cap = std::max(opt.exact_cap, 1)});
    } else {
      r = min_fill_decomposition(wd.graph);
      out.optimal_weak_duals = false;
    }
    out.weak_dual_width = std::max(out.weak_dual_width, r.width);
    parts.push_back(expand_faces(bg, wd, r.decomposition, map.preimages));
  }

  // glue along the spanning links; each child shares exactly one vertex
  std::vector<NodeId> shift(parts.size(), 0);
  shift[0] = out.decomposition.absorb(parts[0]);
  for (const auto& link : pbd.links) {
    shift[link.child] = out.decomposition.absorb(parts[link.child]);
    const NodeId here = *parts[link.child].find_bag_containing({link.shared}) + shift[link.child];
    // lowest bag containing the shared vertex among nodes placed earlier
    NodeId there = kNone;
    for (NodeId i = 0; i < shift[link.child]; ++i) {
      if (std::binary_search(out.decomposition.bags[i].begin(), out.decomposition.bags[i].end(), link.shared)) {
        there = i;
        break;
      }
    }
    out.decomposition.add_tree_edge(there, here);
  }
  return out;
}

OuterplanarUpperBound emw_upper_outerplanar(const PlaneGraph& g, BoundsOptions opt) {
  OuterplanarUpperBound out;
  static_cast<UpperBound&>(out) = emw_upper_weak_dual(g, opt);
  out.outerplanarity_k = outerplanarity(g).k;
  out.max_face_length = g.max_bounded_face_length();
  return out;
}

PlaneGraph generate_gadget(const GadgetSpec& s) {
  if (s.p < 2 || s.q < 2 || s.k < 1) throw Error(ErrorCode::kInvalidSpec, "gadget needs p >= 2, q >= 2, k >= 1");
  const int base = s.base_vertices();
  if (s.n != 0 && s.n < base) {
    throw Error(ErrorCode::kInvalidSpec, "target n is below the gadget's " + std::to_string(base) + " vertices");
  }
  const int total = s.n == 0 ? base : s.n;
  std::vector<std::vector<VertexId>> rot(total);
  auto grid_id = [&](int r, int c) { return r * s.q + c; };
  // subdivision vertices of the vertical edge above (r, c), bottom to top
  auto sub_id = [&](int r, int c, int i) { return s.p * s.q + (r * s.q + c) * (s.k - 1) + i; };
  auto above = [&](int r, int c) { return s.k == 1 ? grid_id(r + 1, c) : sub_id(r, c, 0); };
  auto below = [&](int r, int c) { return s.k == 1 ? grid_id(r - 1, c) : sub_id(r - 1, c, s.k - 2); };

  for (int r = 0; r < s.p; ++r) {
    for (int c = 0; c < s.q; ++c) {
      auto& l = rot[grid_id(r, c)];
      // clockwise from north
      if (r + 1 < s.p) l.push_back(above(r, c));
      if (c + 1 < s.q) l.push_back(grid_id(r, c + 1));
      if (r > 0) l.push_back(below(r, c));
      if (c > 0) l.push_back(grid_id(r, c - 1));
      if (r + 1 < s.p) {
        for (int i = 0; i < s.k - 1; ++i) {
          const VertexId up = i + 1 < s.k - 1 ? sub_id(r, c, i + 1) : grid_id(r + 1, c);
          const VertexId down = i > 0 ? sub_id(r, c, i - 1) : grid_id(r, c);
          rot[sub_id(r, c, i)] = {up, down};
        }
      }
    }
  }
  // padding path leaves the bottom-left corner towards the south-west
  VertexId prev = grid_id(0, 0);
  for (VertexId v = base; v < total; ++v) {
    rot[prev].push_back(v);
    rot[v].push_back(prev);
    prev = v;
  }
  return build_embedding(rot);
}

DualOuterplanarity dual_outerplanarity_labeling(const PlaneGraph& g) {
  require_connected(g, "dual_outerplanarity_labeling");
  const OuterplanarityLabeling op = outerplanarity(g);
  const WeakDual wd = weak_dual(g);
  DualOuterplanarity out;
  out.k = op.k;
  out.layers.assign(std::max(op.k, 0), {});
  out.label.assign(wd.graph.num_vertices(), 0);
  for (VertexId x = 0; x < wd.graph.num_vertices(); ++x) {
    const Face& f = g.face(wd.vertex_to_face[x]);
    // innermost layer is 1: reverse the peeling order
    int j = 0;
    for (VertexId u : f.boundary_vertices) j = std::max(j, op.k + 1 - op.vertex_label[u]);
    out.label[x] = j;
  }
  for (int j = 1; j <= op.k; ++j) {
    for (VertexId x = 0; x < wd.graph.num_vertices(); ++x) {
      if (out.label[x] <= j) out.layers[j - 1].push_back(wd.vertex_to_face[x]);
    }
  }
  if (wd.graph.num_vertices() == 0) {
    out.weak_dual_k = 0;
  } else if (wd.graph.is_connected()) {
    out.weak_dual_k = outerplanarity(weak_dual_embedding(g).graph).k;
  } else {
    // components of the weak dual: each block's weak dual is connected and
    // embeds on its own; the worst component decides
    for (const PseudoBlock& b : pseudo_block_decomposition(g).blocks) {
      if (b.single_edge()) continue;
      const PlaneGraph bg = block_graph(g, b).first;
      if (weak_dual(bg).graph.num_vertices() == 0) continue;
      out.weak_dual_k = std::max(out.weak_dual_k, outerplanarity(weak_dual_embedding(bg).graph).k);
    }
  }
  return out;
}

}  // namespace emw
