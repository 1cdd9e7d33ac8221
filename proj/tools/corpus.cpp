#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace emw::corpus {

namespace {

void insert_after(std::vector<VertexId>& list, VertexId anchor, VertexId x) {
  auto it = std::find(list.begin(), list.end(), anchor);
  list.insert(it + 1, x);
}

void insert_before(std::vector<VertexId>& list, VertexId anchor, VertexId x) {
  auto it = std::find(list.begin(), list.end(), anchor);
  list.insert(it, x);
}

/// successor of x in v's cyclic list
VertexId succ(const Rotation& rot, VertexId v, VertexId x) {
  const auto& l = rot[v];
  auto it = std::find(l.begin(), l.end(), x);
  ++it;
  return it == l.end() ? l.front() : *it;
}

bool adjacent(const Rotation& rot, VertexId u, VertexId v) {
  return std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end();
}

bool connected_without(const Rotation& rot, VertexId u, VertexId v) {
  // BFS from u ignoring one copy of the edge u-v
  std::vector<char> seen(rot.size(), 0);
  std::queue<VertexId> q;
  q.push(u);
  seen[u] = 1;
  bool skipped = false;
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop();
    for (VertexId y : rot[x]) {
      if (x == u && y == v && !skipped) {
        skipped = true;
        continue;
      }
      if (x == v && y == u) continue;
      if (!seen[y]) {
        if (y == v) return true;
        seen[y] = 1;
        q.push(y);
      }
    }
  }
  return false;
}

}  // namespace

Rotation random_triangulation(int n, Rng& rng, int flips) {
  if (n <= 0) return {};
  if (n == 1) return Rotation(1);
  if (n == 2) return {{1}, {0}};
  Rotation rot{{2, 1}, {0, 2}, {1, 0}};
  // face walks a->b->c; the triangle's two sides
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  for (VertexId z = 3; z < n; ++z) {
    const int fi = rng.below(static_cast<int>(faces.size()));
    const auto [a, b, c] = faces[fi];
    insert_after(rot[b], a, z);
    insert_after(rot[c], b, z);
    insert_after(rot[a], c, z);
    rot.push_back({a, c, b});
    faces[fi] = {a, b, z};
    faces.push_back({b, c, z});
    faces.push_back({c, a, z});
  }
  for (int t = 0; t < flips; ++t) {
    const VertexId u = rng.below(n);
    const VertexId v = rot[u][rng.below(static_cast<int>(rot[u].size()))];
    const VertexId x = succ(rot, v, u);
    const VertexId y = succ(rot, u, v);
    if (x == y || adjacent(rot, x, y) || rot[u].size() <= 3 || rot[v].size() <= 3) continue;
    remove_edge(rot, u, v);
    insert_after(rot[y], u, x);
    insert_after(rot[x], v, y);
  }
  return rot;
}

void remove_edge(Rotation& rot, VertexId u, VertexId v) {
  auto& lu = rot[u];
  lu.erase(std::find(lu.begin(), lu.end(), v));
  auto& lv = rot[v];
  lv.erase(std::find(lv.begin(), lv.end(), u));
}

VertexId subdivide(Rotation& rot, VertexId u, VertexId v) {
  const VertexId w = static_cast<VertexId>(rot.size());
  *std::find(rot[u].begin(), rot[u].end(), v) = w;
  *std::find(rot[v].begin(), rot[v].end(), u) = w;
  rot.push_back({u, v});
  return w;
}

Rotation random_rotation(const RandomOptions& opt, Rng& rng) {
  Rotation rot = random_triangulation(opt.n, rng, opt.n);
  const int n = static_cast<int>(rot.size());
  if (n >= 2) {
    int m = 0;
    for (const auto& l : rot) m += static_cast<int>(l.size());
    m /= 2;
    const int tries = static_cast<int>(rng.unit() * opt.max_delete_fraction * (m - (n - 1)) + 0.5);
    const int min_deg = opt.keep_min_degree_two ? 2 : 1;
    for (int t = 0; t < tries; ++t) {
      const VertexId u = rng.below(n);
      if (rot[u].empty()) continue;
      const VertexId v = rot[u][rng.below(static_cast<int>(rot[u].size()))];
      if (static_cast<int>(rot[u].size()) <= min_deg || static_cast<int>(rot[v].size()) <= min_deg) continue;
      if (!connected_without(rot, u, v)) continue;
      remove_edge(rot, u, v);
    }
    for (int s = 0; s < opt.subdivisions; ++s) {
      const VertexId u = rng.below(static_cast<int>(rot.size()));
      if (rot[u].empty()) continue;
      subdivide(rot, u, rot[u][rng.below(static_cast<int>(rot[u].size()))]);
    }
  }
  return rot;
}

PlaneGraph random_plane_graph(const RandomOptions& opt, std::uint64_t seed) {
  Rng rng(seed);
  return build_embedding(random_rotation(opt, rng));
}

std::vector<VertexId> inject_family(Rotation& rot, VertexId a, VertexId b, int r, bool obstruct) {
  std::vector<VertexId> members;
  for (int i = 0; i < r; ++i) {
    const VertexId f = static_cast<VertexId>(rot.size());
    rot.push_back({a, b});
    members.push_back(f);
    // a's list reads ..., f_r, ..., f_1, b; b's list reads a, f_1, ..., f_r, ...
    insert_before(rot[a], i == 0 ? b : members[i - 1], f);
    insert_after(rot[b], i == 0 ? a : members[i - 1], f);
  }
  if (obstruct) {
    for (int i = 0; i + 1 < r; ++i) {
      const VertexId x = static_cast<VertexId>(rot.size());
      const VertexId y = x + 1;
      rot.push_back({a, y});
      rot.push_back({x, b});
      insert_after(rot[a], members[i + 1], x);
      insert_after(rot[b], members[i], y);
    }
  }
  return members;
}

}  // namespace emw::corpus
