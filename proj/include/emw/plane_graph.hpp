#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emw/graph.hpp"

namespace emw {

using DartId = int;
using FaceId = int;

struct Face {
  FaceId id = kNone;
  /// Darts in traversal order; empty for the face of an isolated vertex.
  std::vector<DartId> boundary_walk;
  /// V(boundary), sorted and distinct.
  std::vector<VertexId> boundary_vertices;
  bool bounded = true;

  int length() const { return static_cast<int>(boundary_vertices.size()); }
};

/// Combinatorial embedding: darts 2e and 2e+1 are the two halves of edge e,
/// each vertex stores its outgoing darts in clockwise order, and one face is
/// designated as the unbounded one.
///
/// Faces follow "next dart = clockwise successor of the twin", which traces
/// bounded faces counterclockwise and the outer face clockwise.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Low-level constructor. `rotation[v]` lists the darts leaving v in clockwise
  /// order; every dart in [0, 2 * num_edges) must appear exactly once. The outer
  /// face is the face of `outer_dart` when given, else the longest face.
  static PlaneGraph from_rotation(int num_vertices, int num_edges,
                                  std::vector<std::vector<DartId>> rotation,
                                  std::optional<DartId> outer_dart = std::nullopt);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(origin_.size() / 2); }
  int num_darts() const { return static_cast<int>(origin_.size()); }

  static constexpr DartId twin(DartId d) { return d ^ 1; }
  static constexpr EdgeId edge_of(DartId d) { return d >> 1; }

  VertexId origin(DartId d) const { return origin_[d]; }
  VertexId head(DartId d) const { return origin_[twin(d)]; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return {origin_[2 * e], origin_[2 * e + 1]}; }
  std::span<const DartId> rotation(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
  int rotation_index(DartId d) const { return rot_pos_[d]; }
  DartId rot_next(DartId d) const;
  DartId rot_prev(DartId d) const;
  DartId face_next(DartId d) const { return rot_next(twin(d)); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  FaceId face_of(DartId d) const { return face_of_[d]; }
  /// Face lying in the clockwise corner after dart d at its origin.
  FaceId corner_face(DartId d) const { return face_of_[twin(d)]; }
  FaceId outer_face() const { return outer_; }
  /// Largest bounded-face length, 0 when there is no bounded face.
  int max_bounded_face_length() const;

  bool is_connected() const;
  bool has_self_loops() const;
  bool has_vertex(VertexId v) const { return v >= 0 && v < num_vertices(); }
  AbstractGraph underlying() const;
  /// Order-sensitive hash of the rotation system and the outer face.
  std::uint64_t fingerprint() const;

 private:
  std::vector<VertexId> origin_;
  std::vector<std::vector<DartId>> rotation_;
  std::vector<int> rot_pos_;
  std::vector<FaceId> face_of_;
  std::vector<Face> faces_;
  FaceId outer_ = kNone;
};

/// Builds an embedding from per-vertex clockwise neighbour lists. Repeated
/// neighbours are parallel edges: for u < v with m copies, the k-th copy in
/// u's list pairs with the (m - k + 1)-th in v's list, i.e. ranks are matched
/// from opposite ends, as the copies run in reverse order around the other
/// endpoint. Loop entries pair consecutively. `outer_corner` = (u, i) names the dart at position i
/// of u's list.
PlaneGraph build_embedding(const std::vector<std::vector<VertexId>>& neighbor_rotations,
                           std::optional<std::pair<VertexId, int>> outer_corner = std::nullopt);

/// Result of an operation that renumbers vertices and edges.
struct GraphMap {
  /// new vertex -> old vertices it stands for (one, or two after contraction).
  std::vector<std::vector<VertexId>> preimages;
  /// old vertex -> new vertex, kNone when deleted.
  std::vector<VertexId> vertex_to_new;
  /// old edge -> new edge, kNone when deleted or contracted.
  std::vector<EdgeId> edge_to_new;
};

struct DualGraph {
  PlaneGraph graph;
  /// primal face f <-> dual vertex f; dual edge e <-> primal edge e.
  /// Dual vertex ids equal primal face ids and dual edge ids equal primal edge
  /// ids, so both tables are the identity; they are kept for clarity.
  std::vector<VertexId> face_to_vertex;
  std::vector<EdgeId> edge_to_dual_edge;
  /// primal vertex -> dual face it became.
  std::vector<FaceId> vertex_to_face;
};

DualGraph dual(const PlaneGraph& g);

struct WeakDual {
  AbstractGraph graph;
  /// weak-dual vertex -> primal face, and the inverse (kNone for the outer face).
  std::vector<FaceId> vertex_to_face;
  std::vector<VertexId> face_to_vertex;
};

/// G+ : the dual without the outer face's vertex.
WeakDual weak_dual(const PlaneGraph& g);

/// G+ with the embedding inherited from the dual. Its outer face is the one
/// that absorbed the deleted vertex. Requires a connected weak dual.
struct EmbeddedWeakDual {
  PlaneGraph graph;
  std::vector<FaceId> vertex_to_face;
  std::vector<VertexId> face_to_vertex;
};
EmbeddedWeakDual weak_dual_embedding(const PlaneGraph& g);

/// u+ : weak-dual vertices whose faces have u on their boundary (sorted).
std::vector<VertexId> face_incidence(const PlaneGraph& g, const WeakDual& wd, VertexId u);
std::vector<VertexId> face_incidence(const PlaneGraph& g, VertexId u);

struct OuterplanarityLabeling {
  std::vector<int> vertex_label;
  std::vector<int> face_label;
  int k = 0;
};

OuterplanarityLabeling outerplanarity(const PlaneGraph& g);

/// Contracts every edge of a matching. The merged vertex's rotation is the
/// rotation of one endpoint after the contracted dart followed by the other's.
/// Matching edges with a parallel copy are rejected since they would leave a loop.
std::pair<PlaneGraph, GraphMap> contract_matching(const PlaneGraph& g, const Matching& m);

struct ParallelSimplification {
  PlaneGraph graph;
  GraphMap map;
  /// Deleted edges, as ids of the input graph.
  std::vector<EdgeId> deleted_edges;
};

/// Deletes one copy of each parallel pair bounding a bounded face of length 2,
/// repeating until none is left.
ParallelSimplification simplify_parallel_faces(const PlaneGraph& g);

struct DegreeOneRemoval {
  VertexId vertex;
  VertexId neighbor;
  /// Face of the input graph the vertex lies in.
  FaceId face;
};

struct DegreeOneStrip {
  PlaneGraph graph;
  GraphMap map;
  /// Removals in the order they happened (ids of the input graph).
  std::vector<DegreeOneRemoval> log;
};

/// Removes degree-1 vertices until the minimum degree is 2 or one vertex remains.
DegreeOneStrip strip_degree_one(const PlaneGraph& g);

/// Keeps the listed vertices with all edges among them, preserving the
/// rotation order. The outer face is the face containing a surviving dart of
/// the old outer face, if any.
std::pair<PlaneGraph, GraphMap> delete_vertices(const PlaneGraph& g, const std::vector<VertexId>& removed);

/// Keeps only the listed edges (and all vertices), preserving rotations.
std::pair<PlaneGraph, GraphMap> keep_edges(const PlaneGraph& g, const std::vector<EdgeId>& kept,
                                           std::optional<DartId> outer_dart = std::nullopt);

/// Canonical string of the rotation system of a connected graph, minimised
/// over starting darts; two graphs are isomorphic as embedded graphs exactly
/// when codes match. With `keep_outer`, starts are restricted to outer darts.
std::string canonical_code(const PlaneGraph& g, bool keep_outer = true);

}  // namespace emw
