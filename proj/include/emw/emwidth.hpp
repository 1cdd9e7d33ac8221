#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "emw/decomposition.hpp"
#include "emw/plane_graph.hpp"

namespace emw {

struct EmwConfig {
  /// instances this small go straight to the exact improver
  int base_case_size = 20;
  /// vertex limit of the exact improver
  int improve_cap = 64;
  std::size_t state_budget = 20'000'000;
};

/// Members f_s..f_t of one family whose lenses are all single faces; the
/// interior members are deleted, the ends kept.
struct CompressedRun {
  VertexId a = kNone;
  VertexId b = kNone;
  std::vector<VertexId> members;
};

/// One reduction step, in ids of the graph it was applied to.
struct ReductionStage {
  enum class Kind { kStrip, kCompress, kContract, kParallel };
  Kind kind = Kind::kStrip;
  int vertices_before = 0;
  int edges_before = 0;
  /// from the graph before the stage to the graph after it
  GraphMap map;
  /// strip: removals in order; boundary of every bounded face that lost vertices
  std::vector<DegreeOneRemoval> removals;
  std::vector<std::vector<VertexId>> face_bags;
  /// compress
  std::vector<CompressedRun> runs;
  /// contract: matched edges; parallel: deleted copies
  std::vector<EdgeId> edges;
};

struct ReductionScript {
  std::vector<ReductionStage> stages;
};

/// Steps 1-4 once: strip degree-1 vertices, compress nicely embedded
/// families, contract a greedy maximal matching, drop empty 2-faces.
std::pair<PlaneGraph, ReductionScript> reduce_instance(const PlaneGraph& g);

/// Turns an em-decomposition of the reduced graph into one of the original.
TreeDecomposition expand_decomposition(const TreeDecomposition& t, const ReductionScript& script);

struct LevelStats {
  int depth = 0;
  int n_before = 0;
  int m_before = 0;
  int n_after = 0;
  int m_after = 0;
  int stripped = 0;
  int compressed = 0;
  int matched = 0;
  int parallel_deleted = 0;
  int expanded_width = -1;
  int width_bound = -1;
  bool improved = false;
  bool edges_linear() const { return m_after <= 4 * n_after; }
  /// n_after / n_before
  double ratio() const { return n_before ? static_cast<double>(n_after) / n_before : 1.0; }
};

struct EmwTrace {
  std::vector<LevelStats> levels;
  int base_case_vertices = -1;
  bool early_face_reject = false;
  std::vector<ReductionScript> scripts;
};

struct EmWidthAnswer {
  bool yes = false;
  std::optional<TreeDecomposition> decomposition;
  int width = -1;
  EmwTrace trace;
};

/// Is em-width(g) <= k? A yes answer carries a certificate.
EmWidthAnswer decide_emwidth(const PlaneGraph& g, int k, const EmwConfig& cfg = {});

/// Width-k em-decomposition from any valid one, or a definite no.
EmWidthAnswer improve_decomposition(const PlaneGraph& g, const TreeDecomposition& t, int k,
                                    const EmwConfig& cfg = {});

struct ExactEmWidth {
  int width = -1;
  TreeDecomposition decomposition;
};

/// Exact em-width as the treewidth of the facial completion.
ExactEmWidth exact_emwidth(const PlaneGraph& g, int vertex_cap = 20);

/// Human-readable trace, one event per line.
std::string format_trace(const EmwTrace& trace);

}  // namespace emw
