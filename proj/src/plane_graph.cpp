#include "emw/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "emw/error.hpp"
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

}  // namespace

DartId PlaneGraph::rot_next(DartId d) const {
  const auto& rot = rotation_[origin_[d]];
  const int i = rot_pos_[d] + 1;
  return rot[i == static_cast<int>(rot.size()) ? 0 : i];
}

DartId PlaneGraph::rot_prev(DartId d) const {
  const auto& rot = rotation_[origin_[d]];
  const int i = rot_pos_[d];
  return rot[i == 0 ? rot.size() - 1 : i - 1];
}

PlaneGraph PlaneGraph::from_rotation(int num_vertices, int num_edges,
                                     std::vector<std::vector<DartId>> rotation,
                                     std::optional<DartId> outer_dart) {
  PlaneGraph g;
  const int darts = 2 * num_edges;
  g.rotation_ = std::move(rotation);
  g.rotation_.resize(num_vertices);
  g.origin_.assign(darts, kNone);
  g.rot_pos_.assign(darts, kNone);
  for (VertexId v = 0; v < num_vertices; ++v) {
    for (int i = 0; i < static_cast<int>(g.rotation_[v].size()); ++i) {
      const DartId d = g.rotation_[v][i];
      if (d < 0 || d >= darts || g.origin_[d] != kNone) {
        throw Error(ErrorCode::kInconsistentRotation, "dart listed twice or out of range");
      }
      g.origin_[d] = v;
      g.rot_pos_[d] = i;
    }
  }
  if (std::find(g.origin_.begin(), g.origin_.end(), kNone) != g.origin_.end()) {
    throw Error(ErrorCode::kInconsistentRotation, "dart missing from every rotation");
  }

  g.face_of_.assign(darts, kNone);
  for (DartId start = 0; start < darts; ++start) {
    if (g.face_of_[start] != kNone) continue;
    Face f;
    f.id = static_cast<FaceId>(g.faces_.size());
    DartId d = start;
    do {
      g.face_of_[d] = f.id;
      f.boundary_walk.push_back(d);
      f.boundary_vertices.push_back(g.origin_[d]);
      d = g.face_next(d);
    } while (d != start);
    std::sort(f.boundary_vertices.begin(), f.boundary_vertices.end());
    f.boundary_vertices.erase(std::unique(f.boundary_vertices.begin(), f.boundary_vertices.end()),
                              f.boundary_vertices.end());
    g.faces_.push_back(std::move(f));
  }
  for (VertexId v = 0; v < num_vertices; ++v) {
    if (!g.rotation_[v].empty()) continue;
    Face f;
    f.id = static_cast<FaceId>(g.faces_.size());
    f.boundary_vertices = {v};
    g.faces_.push_back(std::move(f));
  }

  // Euler's formula per component.
  UnionFind uf(num_vertices);
  for (EdgeId e = 0; e < num_edges; ++e) uf.unite(g.origin_[2 * e], g.origin_[2 * e + 1]);
  std::map<int, long> balance;  // V - E + F per component root
  for (VertexId v = 0; v < num_vertices; ++v) balance[uf.find(v)] += 1;
  for (EdgeId e = 0; e < num_edges; ++e) balance[uf.find(g.origin_[2 * e])] -= 1;
  for (const Face& f : g.faces_) balance[uf.find(f.boundary_vertices.front())] += 1;
  for (const auto& [root, chi] : balance) {
    if (chi != 2) {
      throw Error(ErrorCode::kNonPlanarEmbedding,
                  "component of vertex " + std::to_string(root) + " has Euler characteristic " +
                      std::to_string(chi));
    }
  }

  if (g.faces_.empty()) return g;
  if (outer_dart && *outer_dart >= 0 && *outer_dart < darts) {
    g.outer_ = g.face_of_[*outer_dart];
  } else {
    g.outer_ = 0;
    for (const Face& f : g.faces_) {
      if (f.length() > g.faces_[g.outer_].length()) g.outer_ = f.id;
    }
  }
  g.faces_[g.outer_].bounded = false;
  return g;
}

int PlaneGraph::max_bounded_face_length() const {
  int best = 0;
  for (const Face& f : faces_) {
    if (f.bounded) best = std::max(best, f.length());
  }
  return best;
}

bool PlaneGraph::is_connected() const {
  if (num_vertices() <= 1) return true;
  UnionFind uf(num_vertices());
  for (EdgeId e = 0; e < num_edges(); ++e) uf.unite(origin_[2 * e], origin_[2 * e + 1]);
  const int root = uf.find(0);
  for (VertexId v = 1; v < num_vertices(); ++v) {
    if (uf.find(v) != root) return false;
  }
  return true;
}

bool PlaneGraph::has_self_loops() const {
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (origin_[2 * e] == origin_[2 * e + 1]) return true;
  }
  return false;
}

AbstractGraph PlaneGraph::underlying() const {
  AbstractGraph out(num_vertices());
  for (EdgeId e = 0; e < num_edges(); ++e) out.add_edge(origin_[2 * e], origin_[2 * e + 1]);
  return out;
}

std::uint64_t PlaneGraph::fingerprint() const {
  // FNV-1a over (n, outer, rotations).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(num_vertices()));
  mix(static_cast<std::uint64_t>(outer_ + 1));
  for (const auto& rot : rotation_) {
    mix(rot.size());
    for (DartId d : rot) mix(static_cast<std::uint64_t>(d) * 2654435761ULL + origin_[twin(d)]);
  }
  return h;
}

PlaneGraph build_embedding(const std::vector<std::vector<VertexId>>& neighbor_rotations,
                           std::optional<std::pair<VertexId, int>> outer_corner) {
  const int n = static_cast<int>(neighbor_rotations.size());
  // occurrences[u][v] = positions of v in u's list
  std::vector<std::map<VertexId, std::vector<int>>> occurrences(n);
  for (VertexId u = 0; u < n; ++u) {
    for (int i = 0; i < static_cast<int>(neighbor_rotations[u].size()); ++i) {
      const VertexId v = neighbor_rotations[u][i];
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kInconsistentRotation,
                    "vertex " + std::to_string(u) + " lists unknown neighbour " + std::to_string(v));
      }
      occurrences[u][v].push_back(i);
    }
  }

  std::vector<std::vector<DartId>> rotation(n);
  for (VertexId u = 0; u < n; ++u) rotation[u].assign(neighbor_rotations[u].size(), kNone);
  int num_edges = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (const auto& [v, pos_u] : occurrences[u]) {
      if (v < u) continue;
      if (v == u) {
        if (pos_u.size() % 2 != 0) {
          throw Error(ErrorCode::kInconsistentRotation,
                      "vertex " + std::to_string(u) + " lists itself an odd number of times");
        }
        for (std::size_t i = 0; i < pos_u.size(); i += 2) {
          rotation[u][pos_u[i]] = 2 * num_edges;
          rotation[u][pos_u[i + 1]] = 2 * num_edges + 1;
          ++num_edges;
        }
        continue;
      }
      const auto it = occurrences[v].find(u);
      if (it == occurrences[v].end() || it->second.size() != pos_u.size()) {
        throw Error(ErrorCode::kInconsistentRotation,
                    "asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
      }
      const auto& pos_v = it->second;
      const std::size_t m = pos_u.size();
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t partner = m - 1 - k;
        rotation[u][pos_u[k]] = 2 * num_edges;
        rotation[v][pos_v[partner]] = 2 * num_edges + 1;
        ++num_edges;
      }
    }
  }

  std::optional<DartId> outer_dart;
  if (outer_corner) {
    const auto [u, i] = *outer_corner;
    if (u < 0 || u >= n || i < 0 || i >= static_cast<int>(rotation[u].size())) {
      throw Error(ErrorCode::kUnknownVertex, "outer face hint does not name a dart");
    }
    outer_dart = rotation[u][i];
  }
  return PlaneGraph::from_rotation(n, num_edges, std::move(rotation), outer_dart);
}

namespace detail {

Rebuilt rebuild(const PlaneGraph& g, const std::vector<std::vector<DartId>>& rotation_old_darts,
                std::optional<DartId> preferred_outer_old_dart) {
  std::vector<int> seen(g.num_darts(), 0);
  for (const auto& rot : rotation_old_darts) {
    for (DartId d : rot) ++seen[d];
  }
  Rebuilt out;
  out.edge_to_new.assign(g.num_edges(), kNone);
  int next = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (seen[2 * e] == 1 && seen[2 * e + 1] == 1) out.edge_to_new[e] = next++;
  }
  auto map_dart = [&](DartId d) { return 2 * out.edge_to_new[PlaneGraph::edge_of(d)] + (d & 1); };
  std::vector<std::vector<DartId>> rotation;
  rotation.reserve(rotation_old_darts.size());
  for (const auto& rot : rotation_old_darts) {
    std::vector<DartId> r;
    for (DartId d : rot) {
      if (out.edge_to_new[PlaneGraph::edge_of(d)] != kNone) r.push_back(map_dart(d));
    }
    rotation.push_back(std::move(r));
  }

  std::optional<DartId> outer;
  auto alive = [&](DartId d) { return out.edge_to_new[PlaneGraph::edge_of(d)] != kNone; };
  if (preferred_outer_old_dart && alive(*preferred_outer_old_dart)) {
    outer = map_dart(*preferred_outer_old_dart);
  } else if (g.outer_face() != kNone) {
    for (DartId d : g.face(g.outer_face()).boundary_walk) {
      if (alive(d)) {
        outer = map_dart(d);
        break;
      }
    }
  }
  out.graph = PlaneGraph::from_rotation(static_cast<int>(rotation_old_darts.size()), next,
                                        std::move(rotation), outer);
  return out;
}

}  // namespace detail

std::pair<PlaneGraph, GraphMap> delete_vertices(const PlaneGraph& g, const std::vector<VertexId>& removed) {
  GraphMap map;
  map.vertex_to_new.assign(g.num_vertices(), 0);
  for (VertexId v : removed) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kUnknownVertex, std::to_string(v));
    map.vertex_to_new[v] = kNone;
  }
  std::vector<std::vector<DartId>> rotation;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (map.vertex_to_new[v] == kNone) continue;
    map.vertex_to_new[v] = static_cast<VertexId>(map.preimages.size());
    map.preimages.push_back({v});
    std::vector<DartId> r;
    for (DartId d : g.rotation(v)) {
      if (map.vertex_to_new[g.head(d)] != kNone) r.push_back(d);
    }
    rotation.push_back(std::move(r));
  }
  auto rebuilt = detail::rebuild(g, rotation);
  map.edge_to_new = std::move(rebuilt.edge_to_new);
  return {std::move(rebuilt.graph), std::move(map)};
}

std::pair<PlaneGraph, GraphMap> keep_edges(const PlaneGraph& g, const std::vector<EdgeId>& kept,
                                           std::optional<DartId> outer_dart) {
  std::vector<char> keep(g.num_edges(), 0);
  for (EdgeId e : kept) keep[e] = 1;
  GraphMap map;
  std::vector<std::vector<DartId>> rotation(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    map.preimages.push_back({v});
    map.vertex_to_new.push_back(v);
    for (DartId d : g.rotation(v)) {
      if (keep[PlaneGraph::edge_of(d)]) rotation[v].push_back(d);
    }
  }
  auto rebuilt = detail::rebuild(g, rotation, outer_dart);
  map.edge_to_new = std::move(rebuilt.edge_to_new);
  return {std::move(rebuilt.graph), std::move(map)};
}

}  // namespace emw
