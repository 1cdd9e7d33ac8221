#pragma once

#include <optional>
#include <vector>

#include "emw/plane_graph.hpp"

namespace emw::detail {

struct Rebuilt {
  PlaneGraph graph;
  std::vector<EdgeId> edge_to_new;
};

/// Builds a graph whose vertex i has the listed old darts as rotation. An old
/// edge survives when both its darts are listed; survivors keep their relative
/// id order. The outer face follows `preferred_outer_old_dart` when it
/// survives, else the first surviving dart of the old outer walk.
Rebuilt rebuild(const PlaneGraph& g, const std::vector<std::vector<DartId>>& rotation_old_darts,
                std::optional<DartId> preferred_outer_old_dart = std::nullopt);

}  // namespace emw::detail
