#pragma once

// Seeded random plane graphs for the CLI and the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "emw/plane_graph.hpp"

namespace emw::corpus {

/// Clockwise neighbour lists, the input shape of build_embedding.
using Rotation = std::vector<std::vector<VertexId>>;

/// The engine's output is fixed by the standard; the std distributions are
/// not, so draws are reduced by hand to keep files identical across libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// in [0, bound)
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Stacked triangulation on n vertices followed by `flips` random edge flips.
/// For n < 3 returns a single vertex or a single edge.
Rotation random_triangulation(int n, Rng& rng, int flips);

struct RandomOptions {
  int n = 10;
  /// fraction of the deletable edges to try removing, drawn per instance
  /// from [0, max_delete_fraction]
  double max_delete_fraction = 1.0;
  bool keep_min_degree_two = false;
  /// subdivide this many random edges after deletion
  int subdivisions = 0;
};

/// Triangulation, then random edge deletions that keep the graph connected.
Rotation random_rotation(const RandomOptions& opt, Rng& rng);
PlaneGraph random_plane_graph(const RandomOptions& opt, std::uint64_t seed);

/// Remove u-v (one copy) from both lists.
void remove_edge(Rotation& rot, VertexId u, VertexId v);
/// Replace edge u-v by a path u-w-v through a new vertex; returns w.
VertexId subdivide(Rotation& rot, VertexId u, VertexId v);

/// Add r members f_1..f_r with neighbours {a, b} next to the existing edge
/// a-b; each lens between consecutive members gets a path a-x-y-b.
/// Returns the member ids.
std::vector<VertexId> inject_family(Rotation& rot, VertexId a, VertexId b, int r, bool obstruct);

}  // namespace emw::corpus
