#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "emw/decomposition.hpp"
#include "emw/graph.hpp"

namespace emw {

/// Bitmask search supports at most this many vertices.
inline constexpr int kMaxSearchVertices = 64;

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  std::vector<VertexId> elimination_order;
};

struct SearchLimits {
  int vertex_cap = 20;
  /// Memoised dead states before the search gives up with InstanceTooLarge.
  std::size_t state_budget = 20'000'000;
};

/// Exact treewidth with a witness decomposition, by search over elimination
/// orderings with memoisation of infeasible eliminated sets. Loops and
/// parallel edges are ignored. Throws InstanceTooLarge above the vertex cap.
TreewidthResult exact_treewidth(const AbstractGraph& g, SearchLimits limits = {});

/// Decision version: a decomposition of width <= k, or nullopt if none exists.
std::optional<TreewidthResult> treewidth_at_most(const AbstractGraph& g, int k, SearchLimits limits = {});

/// Greedy min-fill elimination (ties: min degree, then lowest id). Any size.
TreewidthResult min_fill_decomposition(const AbstractGraph& g);

/// Minor-min-width lower bound.
int treewidth_lower_bound(const AbstractGraph& g);

}  // namespace emw
