#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emw/graph.hpp"
#include "emw/plane_graph.hpp"

namespace emw {

/// What lies between two consecutive members, seen from the hub pair.
enum class LensKind {
  kJoined,     // a single face a, f_i, b, f_{i+1}
  kSplit,      // no vertex inside, but cut by edges between the hubs
  kEnclosing,  // strictly encloses vertices
};

/// Maximal set of degree-2 vertices with the same two neighbours.
struct RFamily {
  VertexId a = kNone;  // a < b
  VertexId b = kNone;
  /// f_1..f_r in the clockwise order around a, starting after the region
  /// that holds the outer face
  std::vector<VertexId> members;
  /// lens[i] describes the region between members[i] and members[i+1]
  std::vector<LensKind> lens;
  bool nicely_embedded = true;
  /// vertex sets strictly inside a bounded face of the family subgraph
  std::vector<std::vector<VertexId>> obstructions;
  /// fingerprint of the graph the family was found in
  std::uint64_t stamp = 0;

  int r() const { return static_cast<int>(members.size()); }
};

/// All maximal families with at least r_min members (r_min >= 2).
std::vector<RFamily> find_r_families(const PlaneGraph& g, int r_min);

struct NiceEmbeddingCheck {
  bool nicely_embedded = true;
  std::vector<std::vector<VertexId>> obstructions;
};

/// Recomputes the check; throws StaleFamily if g is not the graph fam came from.
NiceEmbeddingCheck is_nicely_embedded(const PlaneGraph& g, const RFamily& fam);

/// Maximum-cardinality matching (blossom shrinking). Loops are ignored.
Matching maximum_matching(const AbstractGraph& g);

/// Scans edges in id order and takes every edge whose ends are both free.
Matching greedy_maximal_matching(const AbstractGraph& g);
Matching greedy_maximal_matching(const PlaneGraph& g);

struct Orientation {
  /// forward[e]: edge e = (u, v) points u -> v; otherwise v -> u
  std::vector<bool> forward;
  std::vector<VertexId> sinks;
};

/// Strong orientation of every 2-edge-connected piece, bridges pointing at a
/// root chosen inside a non-trivial piece when there is one.
Orientation orient_one_sink(const AbstractGraph& g);

struct MatchingConstructionTrace {
  /// "1", "2a", "2b" for the family-free construction; "1", "2" for the
  /// construction that tolerates badly embedded families
  std::string case_tag;
  int n = 0;
  double c = 0;  // fraction of degree-2 vertices
  double q = 0;  // fraction of those that are social
  int t1 = 0;    // social vertices matched among themselves
  int t2 = 0;    // social vertices with no social neighbour
  /// case 1
  int augmented_vertices = 0;
  bool deg3_bound_checked = false;
  bool deg3_bound_held = true;
  /// case 2a: edges of the lonely subgraph
  std::vector<EdgeId> lonely_edges;
  /// case 2b: the contracted multigraph and its simple version
  int f_edges = 0;
  std::vector<std::pair<VertexId, VertexId>> fbar_edges;
  int fbar_vertices = 0;
  bool fbar_edge_bound_held = true;
  bool fbar_vertex_bound_held = true;
  /// tolerant construction
  int p = 0;
  int obstructions = 0;
  int harvested = 0;
  /// fell back to maximum_matching (small instance or bound missed)
  bool fallback = false;
  std::vector<MatchingConstructionTrace> inner;
};

struct MatchingResult {
  Matching matching;
  MatchingConstructionTrace trace;
};

/// Matching of size >= n/(12r-3) for a connected graph of minimum degree 2
/// without r-families.
MatchingResult matching_no_r_family(const PlaneGraph& g, int r);

/// Matching of size >= n/37 for a connected plane graph of minimum degree 2
/// whose families (r >= 3) all enclose something.
MatchingResult matching_no_nice_family(const PlaneGraph& g);

}  // namespace emw
