#include <algorithm>
#include <array>

#include "emw/error.hpp"
#include "emw/matching.hpp"

namespace emw {

namespace {

struct Region {
  std::vector<FaceId> faces;
  std::vector<VertexId> enclosed;
  bool outer = false;
};

/// Faces reachable from `start` without crossing an edge of H.
Region flood_region(const PlaneGraph& g, FaceId start, const std::vector<char>& in_h,
                    const std::vector<char>& h_vertex, std::vector<int>& face_mark, int stamp) {
  Region out;
  std::vector<FaceId> stack{start};
  face_mark[start] = stamp;
  while (!stack.empty()) {
    const FaceId f = stack.back();
    stack.pop_back();
    out.faces.push_back(f);
    if (f == g.outer_face()) out.outer = true;
    for (DartId d : g.face(f).boundary_walk) {
      if (in_h[PlaneGraph::edge_of(d)]) continue;
      const FaceId other = g.face_of(PlaneGraph::twin(d));
      if (face_mark[other] != stamp) {
        face_mark[other] = stamp;
        stack.push_back(other);
      }
    }
  }
  for (FaceId f : out.faces) {
    for (VertexId u : g.face(f).boundary_vertices) {
      if (!h_vertex[u]) out.enclosed.push_back(u);
    }
  }
  std::sort(out.enclosed.begin(), out.enclosed.end());
  out.enclosed.erase(std::unique(out.enclosed.begin(), out.enclosed.end()), out.enclosed.end());
  return out;
}

/// Orders the members around a and classifies every lens.
RFamily analyze(const PlaneGraph& g, VertexId a, VertexId b, std::vector<VertexId> members, std::uint64_t stamp) {
  RFamily fam;
  fam.a = a;
  fam.b = b;
  fam.stamp = stamp;
  const int r = static_cast<int>(members.size());

  // dart a -> f for each member
  auto dart_from_a = [&](VertexId f) {
    for (DartId d : g.rotation(f)) {
      if (g.head(d) == a) return PlaneGraph::twin(d);
    }
    return DartId{kNone};
  };
  std::vector<std::pair<int, VertexId>> by_position;
  for (VertexId f : members) by_position.emplace_back(g.rotation_index(dart_from_a(f)), f);
  std::sort(by_position.begin(), by_position.end());
  for (int i = 0; i < r; ++i) members[i] = by_position[i].second;

  std::vector<char> in_h(g.num_edges(), 0);
  std::vector<char> h_vertex(g.num_vertices(), 0);
  h_vertex[a] = h_vertex[b] = 1;
  for (VertexId f : members) {
    h_vertex[f] = 1;
    for (DartId d : g.rotation(f)) in_h[PlaneGraph::edge_of(d)] = 1;
  }

  std::vector<int> face_mark(g.num_faces(), -1);
  std::vector<Region> gaps;
  int outer_gap = 0;
  for (int i = 0; i < r; ++i) {
    // the corner after a -> f_i, clockwise, opens the gap towards f_{i+1}
    const FaceId start = g.corner_face(dart_from_a(members[i]));
    gaps.push_back(flood_region(g, start, in_h, h_vertex, face_mark, i));
    if (gaps.back().outer) outer_gap = i;
  }

  for (int j = 1; j <= r; ++j) fam.members.push_back(members[(outer_gap + j) % r]);
  for (int j = 1; j < r; ++j) {
    const Region& gap = gaps[(outer_gap + j) % r];
    LensKind kind = LensKind::kJoined;
    if (!gap.enclosed.empty()) {
      kind = LensKind::kEnclosing;
      fam.nicely_embedded = false;
      fam.obstructions.push_back(gap.enclosed);
    } else if (gap.faces.size() > 1) {
      kind = LensKind::kSplit;
    }
    fam.lens.push_back(kind);
  }
  return fam;
}

/// Stable counting sort of indices by key in [0, range).
void counting_sort(std::vector<int>& idx, const std::vector<int>& key, int range) {
  std::vector<int> count(range + 1, 0);
  for (int i : idx) ++count[key[i] + 1];
  for (int v = 0; v < range; ++v) count[v + 1] += count[v];
  std::vector<int> out(idx.size());
  for (int i : idx) out[count[key[i]]++] = i;
  idx = std::move(out);
}

}  // namespace

std::vector<RFamily> find_r_families(const PlaneGraph& g, int r_min) {
  const int n = g.num_vertices();
  std::vector<VertexId> deg2;
  std::vector<int> lo(n, 0), hi(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    const auto rot = g.rotation(v);
    VertexId x = g.head(rot[0]), y = g.head(rot[1]);
    if (x == y || x == v || y == v) continue;
    lo[v] = std::min(x, y);
    hi[v] = std::max(x, y);
    deg2.push_back(v);
  }
  // radix sort by (lo, hi): low digit first
  counting_sort(deg2, hi, n);
  counting_sort(deg2, lo, n);

  std::vector<RFamily> out;
  const std::uint64_t stamp = g.fingerprint();
  const int need = std::max(r_min, 2);
  for (std::size_t i = 0; i < deg2.size();) {
    std::size_t j = i;
    while (j < deg2.size() && lo[deg2[j]] == lo[deg2[i]] && hi[deg2[j]] == hi[deg2[i]]) ++j;
    if (static_cast<int>(j - i) >= need) {
      std::vector<VertexId> members(deg2.begin() + i, deg2.begin() + j);
      out.push_back(analyze(g, lo[deg2[i]], hi[deg2[i]], std::move(members), stamp));
    }
    i = j;
  }
  return out;
}

NiceEmbeddingCheck is_nicely_embedded(const PlaneGraph& g, const RFamily& fam) {
  if (fam.stamp != g.fingerprint()) throw Error(ErrorCode::kStaleFamily, "graph changed since the family was found");
  const RFamily fresh = analyze(g, fam.a, fam.b, fam.members, fam.stamp);
  return {fresh.nicely_embedded, fresh.obstructions};
}

}  // namespace emw
