#pragma once

#include <vector>

#include "emw/decomposition.hpp"
#include "emw/plane_graph.hpp"

namespace emw {

struct PseudoBlock {
  std::vector<EdgeId> edges;        // sorted
  std::vector<VertexId> vertices;   // sorted
  bool single_edge() const { return edges.size() == 1; }
};

/// Blocks obtained by cutting only at vertices that occur more than once on
/// the outer walk, and only at their outer corners.
struct PseudoBlockDecomposition {
  std::vector<PseudoBlock> blocks;
  /// vertices shared by two or more blocks
  std::vector<VertexId> cut_vertices;
  /// spanning links (block, block, shared vertex) in discovery order
  struct Link {
    int parent;
    int child;
    VertexId shared;
  };
  std::vector<Link> links;
};

PseudoBlockDecomposition pseudo_block_decomposition(const PlaneGraph& g);

/// The block as a plane graph of its own; its outer face is the one holding
/// the block's part of the outer walk. `map.preimages` names g's vertices.
std::pair<PlaneGraph, GraphMap> block_graph(const PlaneGraph& g, const PseudoBlock& b);

struct BoundsOptions {
  /// weak duals up to this many vertices get an optimal decomposition
  int exact_cap = 18;
};

struct UpperBound {
  TreeDecomposition decomposition;
  /// false when some weak dual was too large and min-fill was used instead
  bool optimal_weak_duals = true;
  /// largest weak-dual width used over all blocks (-1 if none)
  int weak_dual_width = -1;
};

/// Decomposes each block's weak dual, replaces every face by its boundary
/// vertices, and glues the blocks at shared vertices.
UpperBound emw_upper_weak_dual(const PlaneGraph& g, BoundsOptions opt = {});

/// Same construction; the caller compares against 3k*l - 1 with k the
/// outerplanarity. `outerplanarity_k` reports that k.
struct OuterplanarUpperBound : UpperBound {
  int outerplanarity_k = 0;
  int max_face_length = 0;
  int bound() const { return 3 * outerplanarity_k * max_face_length - 1; }
};
OuterplanarUpperBound emw_upper_outerplanar(const PlaneGraph& g, BoundsOptions opt = {});

/// p x q grid whose vertical edges are subdivided k-1 times, optionally padded
/// to n vertices by a path hanging off the bottom-left corner.
struct GadgetSpec {
  int p = 2;
  int q = 2;
  int k = 1;
  int n = 0;  // 0: no padding
  int base_vertices() const { return p * q + (p - 1) * q * (k - 1); }
  int face_length() const { return 2 * k + 2; }
};

PlaneGraph generate_gadget(const GadgetSpec& spec);

/// Labels of the weak dual derived from the outerplanarity layers of g: a
/// face gets the deepest layer index among its boundary vertices, counted
/// from the innermost layer (1) outwards.
struct DualOuterplanarity {
  /// weak-dual vertex (same ids as weak_dual(g)) -> label in [1, k]
  std::vector<int> label;
  /// layers[j-1] = bounded faces of g whose boundary lies in layers <= j
  std::vector<std::vector<FaceId>> layers;
  int k = 0;
  /// outerplanarity of the embedded weak dual, computed independently
  int weak_dual_k = 0;
  bool certified() const { return weak_dual_k <= k; }
};

DualOuterplanarity dual_outerplanarity_labeling(const PlaneGraph& g);

}  // namespace emw
