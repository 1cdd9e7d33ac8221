#pragma once

#include <utility>
#include <vector>

namespace emw {

using VertexId = int;
using EdgeId = int;

inline constexpr int kNone = -1;

/// Undirected multigraph without an embedding. Loops are allowed.
class AbstractGraph {
 public:
  AbstractGraph() = default;
  explicit AbstractGraph(int num_vertices) : adjacency_(num_vertices) {}

  EdgeId add_edge(VertexId u, VertexId v);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  /// Incident edge ids; a loop is listed twice.
  const std::vector<EdgeId>& incident(VertexId v) const { return adjacency_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
  VertexId other(EdgeId e, VertexId v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }
  bool has_edge(VertexId u, VertexId v) const;
  bool is_connected() const;

  /// Subgraph induced by `keep` (sorted or not); vertex i of the result is keep[i].
  AbstractGraph induced(const std::vector<VertexId>& keep) const;
  /// Same vertex set, parallel edges and loops dropped.
  AbstractGraph simple() const;

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

/// Set of pairwise vertex-disjoint edges, by edge id of the host graph.
struct Matching {
  std::vector<EdgeId> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

/// True when no two edges of `m` share an endpoint and none is a loop.
bool is_matching(const AbstractGraph& g, const Matching& m);

}  // namespace emw
