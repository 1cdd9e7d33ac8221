#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "emw/error.hpp"
#include "emw/graph.hpp"

#include "emw/plane_graph.hpp"

// Small hand-built embeddings shared by the unit tests. All rotations are
// clockwise with the x axis pointing right and y pointing up.
namespace emw::fixtures {

inline PlaneGraph triangle() { return build_embedding({{2, 1}, {0, 2}, {1, 0}}); }

inline PlaneGraph cycle(int n) {
  std::vector<std::vector<VertexId>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
  return build_embedding(rot);
}

inline PlaneGraph path(int n) {
  std::vector<std::vector<VertexId>> rot(n);
  for (int i = 0; i + 1 < n; ++i) {
    rot[i].push_back(i + 1);
    rot[i + 1].push_back(i);
  }
  return build_embedding(rot);
}

/// p rows by q columns, vertex r*q+c at (c, r).
inline PlaneGraph grid(int p, int q) {
  std::vector<std::vector<VertexId>> rot(p * q);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < q; ++c) {
      auto& l = rot[r * q + c];
      // clockwise from north: N, E, S, W
      if (r + 1 < p) l.push_back((r + 1) * q + c);
      if (c + 1 < q) l.push_back(r * q + c + 1);
      if (r > 0) l.push_back((r - 1) * q + c);
      if (c > 0) l.push_back(r * q + c - 1);
    }
  }
  return build_embedding(rot);
}

/// Wheel with hub 0 and rim 1..n, rim counterclockwise around the hub.
inline PlaneGraph wheel(int n) {
  std::vector<std::vector<VertexId>> rot(n + 1);
  for (int i = n; i >= 1; --i) rot[0].push_back(i);
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    const int prev = (i + n - 2) % n + 1;
    rot[i] = {0, next, prev};
  }
  return build_embedding(rot);
}

/// K4 drawn as triangle 0,1,2 with 3 in the middle.
inline PlaneGraph k4() { return build_embedding({{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {1, 0, 2}}); }

/// K_{2,r}: hubs 0 and 1, members 2..r+1 stacked left to right between them.
inline PlaneGraph k2r(int r, bool hub_edge = false) {
  std::vector<std::vector<VertexId>> rot(r + 2);
  // hub 0 at the top, hub 1 at the bottom, members along the x axis
  for (int i = r + 1; i >= 2; --i) rot[0].push_back(i);
  for (int i = 2; i < r + 2; ++i) rot[1].push_back(i);
  for (int i = 2; i < r + 2; ++i) rot[i] = {0, 1};
  if (hub_edge) {
    // drawn inside the lens between members 2 and 3
    rot[0].insert(rot[0].end() - 1, 1);
    rot[1].insert(rot[1].begin() + 1, 0);
  }
  return build_embedding(rot);
}

/// Fan triangulation: path 1..n-1 all joined to apex 0 (outerplanar).
inline PlaneGraph fan(int n) {
  std::vector<std::vector<VertexId>> rot(n);
  for (int i = n - 1; i >= 1; --i) rot[0].push_back(i);
  for (int i = 1; i < n; ++i) {
    if (i > 1) rot[i].push_back(i - 1);
    rot[i].push_back(0);
    if (i + 1 < n) rot[i].push_back(i + 1);
  }
  return build_embedding(rot);
}

/// Straight-line drawing to rotation system. Vertex `far` (if any) sits at
/// infinity: edges towards it leave radially from the origin.
inline PlaneGraph from_points(const std::vector<std::pair<double, double>>& pts,
                              const std::vector<std::pair<VertexId, VertexId>>& edges, VertexId far = kNone) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<std::pair<double, VertexId>>> around(n);
  auto angle = [&](VertexId u, VertexId v) {
    if (v == far) return std::atan2(pts[u].second, pts[u].first);
    if (u == far) return std::atan2(pts[v].second, pts[v].first);
    return std::atan2(pts[v].second - pts[u].second, pts[v].first - pts[u].first);
  };
  for (auto [u, v] : edges) {
    around[u].emplace_back(angle(u, v), v);
    around[v].emplace_back(angle(v, u), u);
  }
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId u = 0; u < n; ++u) {
    // clockwise = decreasing angle; at infinity the sense flips
    std::sort(around[u].begin(), around[u].end());
    if (u != far) std::reverse(around[u].begin(), around[u].end());
    for (auto [a, v] : around[u]) rot[u].push_back(v);
  }
  return build_embedding(rot);
}

/// Icosahedron: apex 0, rings 1..5 and 6..10, vertex 11 at infinity.
inline PlaneGraph icosahedron() {
  std::vector<std::pair<double, double>> pts(12, {0.0, 0.0});
  for (int i = 0; i < 5; ++i) {
    const double t = 2 * M_PI * i / 5;
    pts[1 + i] = {std::cos(t), std::sin(t)};
    pts[6 + i] = {3 * std::cos(t + M_PI / 5), 3 * std::sin(t + M_PI / 5)};
  }
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    e.push_back({0, 1 + i});
    e.push_back({1 + i, 1 + j});
    e.push_back({1 + i, 6 + i});
    e.push_back({1 + j, 6 + i});
    e.push_back({6 + i, 6 + j});
    e.push_back({6 + i, 11});
  }
  return from_points(pts, e, 11);
}

/// Cube: two nested 4-cycles joined by four spokes.
inline PlaneGraph cube() {
  std::vector<std::pair<double, double>> pts{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {-2, -2}, {2, -2}, {2, 2}, {-2, 2}};
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < 4; ++i) {
    e.push_back({i, (i + 1) % 4});
    e.push_back({4 + i, 4 + (i + 1) % 4});
    e.push_back({i, 4 + i});
  }
  return from_points(pts, e);
}

inline AbstractGraph petersen() {
  AbstractGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace emw::fixtures
