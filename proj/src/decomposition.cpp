#include "emw/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "emw/error.hpp"

namespace emw {

NodeId TreeDecomposition::add_node(std::vector<VertexId> bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  bags.push_back(std::move(bag));
  return num_nodes() - 1;
}

std::optional<NodeId> TreeDecomposition::find_bag_containing(const std::vector<VertexId>& vs) const {
  std::vector<VertexId> want(vs);
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  for (NodeId i = 0; i < num_nodes(); ++i) {
    if (std::includes(bags[i].begin(), bags[i].end(), want.begin(), want.end())) return i;
  }
  return std::nullopt;
}

NodeId TreeDecomposition::absorb(const TreeDecomposition& other) {
  const NodeId shift = num_nodes();
  for (const auto& bag : other.bags) bags.push_back(bag);
  for (auto [a, b] : other.tree_edges) tree_edges.emplace_back(a + shift, b + shift);
  return shift;
}

TreeDecomposition TreeDecomposition::relabeled(const std::vector<std::vector<VertexId>>& mapping) const {
  TreeDecomposition out;
  out.tree_edges = tree_edges;
  for (const auto& bag : bags) {
    std::vector<VertexId> nb;
    for (VertexId v : bag) nb.insert(nb.end(), mapping[v].begin(), mapping[v].end());
    out.add_node(std::move(nb));
  }
  return out;
}

int width(const TreeDecomposition& t) {
  if (t.bags.empty()) throw Error(ErrorCode::kEmptyDecomposition, "decomposition has no nodes");
  std::size_t best = 0;
  for (const auto& bag : t.bags) best = std::max(best, bag.size());
  return static_cast<int>(best) - 1;
}

namespace {

ValidationReport validate_core(int num_vertices, const std::vector<std::pair<VertexId, VertexId>>& edges,
                               const TreeDecomposition& t) {
  ValidationReport r;
  const int nodes = t.num_nodes();
  for (const auto& bag : t.bags) {
    for (VertexId v : bag) {
      if (v < 0 || v >= num_vertices) {
        throw Error(ErrorCode::kForeignVertexInBag, "bag holds vertex " + std::to_string(v));
      }
    }
  }
  r.width = nodes == 0 ? -1 : width(t);

  std::vector<std::vector<NodeId>> adj(nodes);
  for (auto [a, b] : t.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) {
      r.is_tree = false;
      continue;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (r.is_tree && nodes > 0) {
    // connected with nodes - 1 edges
    std::vector<char> seen(nodes, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    r.is_tree = count == nodes && static_cast<int>(t.tree_edges.size()) == nodes - 1;
  } else if (nodes == 0) {
    r.is_tree = t.tree_edges.empty();
  }

  std::vector<std::vector<NodeId>> holders(num_vertices);
  for (NodeId i = 0; i < nodes; ++i) {
    for (VertexId v : t.bags[i]) holders[v].push_back(i);
  }
  for (VertexId v = 0; v < num_vertices; ++v) {
    if (holders[v].empty()) {
      r.vertex_coverage = false;
      if (!r.uncovered_vertex) r.uncovered_vertex = v;
    }
  }
  for (auto [u, v] : edges) {
    if (u == v) continue;
    const auto& a = holders[u];
    const auto& b = holders[v];
    std::vector<NodeId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      r.edge_coverage = false;
      if (!r.uncovered_edge) r.uncovered_edge = std::make_pair(std::min(u, v), std::max(u, v));
    }
  }
  // the nodes holding v must induce a connected subtree
  std::vector<int> mark(nodes, -1);
  for (VertexId v = 0; v < num_vertices; ++v) {
    const auto& hs = holders[v];
    if (hs.size() <= 1) continue;
    for (NodeId i : hs) mark[i] = v;
    std::vector<NodeId> stack{hs.front()};
    mark[hs.front()] = -2 - v;
    std::size_t count = 1;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : adj[x]) {
        if (mark[y] == v) {
          mark[y] = -2 - v;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != hs.size()) {
      r.subtree_connectivity = false;
      if (!r.disconnected_vertex) r.disconnected_vertex = v;
    }
  }
  return r;
}

}  // namespace

ValidationReport validate_tree_decomposition(const AbstractGraph& g, const TreeDecomposition& t) {
  return validate_core(g.num_vertices(), g.edges(), t);
}

ValidationReport validate_tree_decomposition(const PlaneGraph& g, const TreeDecomposition& t) {
  return validate_tree_decomposition(g.underlying(), t);
}

ValidationReport validate_em_decomposition(const PlaneGraph& g, const TreeDecomposition& t) {
  ValidationReport r = validate_tree_decomposition(g, t);
  for (const Face& f : g.faces()) {
    if (!f.bounded) continue;
    if (!t.find_bag_containing(f.boundary_vertices)) {
      r.face_coverage = false;
      r.uncovered_face = f.id;
      break;
    }
  }
  return r;
}

AbstractGraph facial_completion(const PlaneGraph& g) {
  std::set<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u != v) edges.emplace(std::min(u, v), std::max(u, v));
  }
  for (const Face& f : g.faces()) {
    if (!f.bounded) continue;
    const auto& vs = f.boundary_vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace(vs[i], vs[j]);
    }
  }
  AbstractGraph out(g.num_vertices());
  for (auto [u, v] : edges) out.add_edge(u, v);
  return out;
}

TreeDecomposition decomposition_from_order(const AbstractGraph& g, const std::vector<VertexId>& order) {
  const int n = g.num_vertices();
  TreeDecomposition t;
  if (n == 0) return t;
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::set<VertexId>> nbrs(n);
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    nbrs[u].insert(v);
    nbrs[v].insert(u);
  }
  std::vector<NodeId> node_of(n);
  std::vector<std::vector<VertexId>> later(n);
  for (int i = 0; i < n; ++i) {
    const VertexId v = order[i];
    for (VertexId w : nbrs[v]) {
      if (position[w] > i) later[v].push_back(w);
    }
    // fill: later neighbours become a clique
    for (VertexId a : later[v]) {
      for (VertexId b : later[v]) {
        if (a != b) nbrs[a].insert(b);
      }
    }
    std::vector<VertexId> bag = later[v];
    bag.push_back(v);
    node_of[v] = t.add_node(std::move(bag));
  }
  // parent: the earliest-eliminated later neighbour; roots are chained
  NodeId previous_root = kNone;
  for (int i = 0; i < n; ++i) {
    const VertexId v = order[i];
    if (later[v].empty()) {
      if (previous_root != kNone) t.add_tree_edge(previous_root, node_of[v]);
      previous_root = node_of[v];
      continue;
    }
    VertexId parent = later[v].front();
    for (VertexId w : later[v]) {
      if (position[w] < position[parent]) parent = w;
    }
    t.add_tree_edge(node_of[v], node_of[parent]);
  }
  return t;
}

TreeDecomposition trivial_decomposition(int num_vertices) {
  TreeDecomposition t;
  std::vector<VertexId> all(num_vertices);
  std::iota(all.begin(), all.end(), 0);
  t.add_node(std::move(all));
  return t;
}

}  // namespace emw
