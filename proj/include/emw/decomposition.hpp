#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "emw/graph.hpp"
#include "emw/plane_graph.hpp"

namespace emw {

using NodeId = int;

/// Tree (I, F) with a bag of host vertices on every node. Bags are kept sorted.
struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;
  std::vector<std::pair<NodeId, NodeId>> tree_edges;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  NodeId add_node(std::vector<VertexId> bag);
  void add_tree_edge(NodeId a, NodeId b) { tree_edges.emplace_back(a, b); }
  /// Lowest node whose bag contains every vertex of `vs`, if any.
  std::optional<NodeId> find_bag_containing(const std::vector<VertexId>& vs) const;
  /// Appends `other`, shifting its node ids; returns the shift.
  NodeId absorb(const TreeDecomposition& other);
  /// Replaces every vertex v by mapping[v] (which may expand to several vertices).
  TreeDecomposition relabeled(const std::vector<std::vector<VertexId>>& mapping) const;
};

/// Max bag size - 1. Throws EmptyDecomposition when there are no nodes.
int width(const TreeDecomposition& t);

struct ValidationReport {
  bool is_tree = true;
  bool vertex_coverage = true;
  bool edge_coverage = true;
  bool subtree_connectivity = true;
  bool face_coverage = true;  // em-decompositions only
  std::optional<VertexId> uncovered_vertex;
  std::optional<std::pair<VertexId, VertexId>> uncovered_edge;
  std::optional<VertexId> disconnected_vertex;
  std::optional<FaceId> uncovered_face;
  int width = -1;

  bool tree_decomposition_ok() const {
    return is_tree && vertex_coverage && edge_coverage && subtree_connectivity;
  }
  bool ok() const { return tree_decomposition_ok() && face_coverage; }
};

ValidationReport validate_tree_decomposition(const AbstractGraph& g, const TreeDecomposition& t);
ValidationReport validate_tree_decomposition(const PlaneGraph& g, const TreeDecomposition& t);
ValidationReport validate_em_decomposition(const PlaneGraph& g, const TreeDecomposition& t);

/// Simple graph on V(g): every edge of g plus a clique on each bounded face.
AbstractGraph facial_completion(const PlaneGraph& g);

/// Decomposition induced by an elimination ordering: the bag of v is v plus its
/// later neighbours in the fill graph; components are chained together.
TreeDecomposition decomposition_from_order(const AbstractGraph& g, const std::vector<VertexId>& order);

/// Single-node decomposition holding every vertex of an n-vertex graph.
TreeDecomposition trivial_decomposition(int num_vertices);

}  // namespace emw
