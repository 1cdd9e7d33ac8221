#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "emw/error.hpp"
#include "emw/plane_graph.hpp"
#include "plane_graph_internal.hpp"

namespace emw {

namespace {

void require_connected(const PlaneGraph& g, const char* op) {
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnectedInput, op);
}

}  // namespace

DualGraph dual(const PlaneGraph& g) {
  require_connected(g, "dual");
  DualGraph out;
  std::vector<std::vector<DartId>> rotation(g.num_faces());
  for (const Face& f : g.faces()) rotation[f.id] = f.boundary_walk;
  out.graph = PlaneGraph::from_rotation(g.num_faces(), g.num_edges(), std::move(rotation));
  out.face_to_vertex.resize(g.num_faces());
  for (FaceId f = 0; f < g.num_faces(); ++f) out.face_to_vertex[f] = f;
  out.edge_to_dual_edge.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) out.edge_to_dual_edge[e] = e;
  out.vertex_to_face.assign(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) out.vertex_to_face[v] = out.graph.face_of(g.rotation(v).front());
  }
  return out;
}

WeakDual weak_dual(const PlaneGraph& g) {
  require_connected(g, "weak_dual");
  WeakDual out;
  out.face_to_vertex.assign(g.num_faces(), kNone);
  for (const Face& f : g.faces()) {
    if (!f.bounded) continue;
    out.face_to_vertex[f.id] = static_cast<VertexId>(out.vertex_to_face.size());
    out.vertex_to_face.push_back(f.id);
  }
  out.graph = AbstractGraph(static_cast<int>(out.vertex_to_face.size()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const VertexId a = out.face_to_vertex[g.face_of(2 * e)];
    const VertexId b = out.face_to_vertex[g.face_of(2 * e + 1)];
    if (a != kNone && b != kNone) out.graph.add_edge(a, b);
  }
  return out;
}

EmbeddedWeakDual weak_dual_embedding(const PlaneGraph& g) {
  const DualGraph d = dual(g);
  const PlaneGraph& dg = d.graph;
  const VertexId removed = g.outer_face();

  std::vector<std::vector<DartId>> rotation;
  EmbeddedWeakDual out;
  out.face_to_vertex.assign(g.num_faces(), kNone);
  for (VertexId v = 0; v < dg.num_vertices(); ++v) {
    if (v == removed) continue;
    out.face_to_vertex[v] = static_cast<VertexId>(out.vertex_to_face.size());
    out.vertex_to_face.push_back(v);
    std::vector<DartId> r;
    for (DartId x : dg.rotation(v)) {
      if (dg.head(x) != removed) r.push_back(x);
    }
    rotation.push_back(std::move(r));
  }
  // A surviving dart whose old face ran into the deleted vertex lies on the
  // face that absorbs it.
  std::optional<DartId> outer;
  for (DartId x = 0; x < dg.num_darts() && !outer; ++x) {
    if (dg.origin(x) == removed || dg.head(x) == removed) continue;
    if (dg.head(dg.face_next(x)) == removed) outer = x;
  }
  detail::Rebuilt rebuilt = detail::rebuild(dg, rotation, outer);
  if (!rebuilt.graph.is_connected()) {
    throw Error(ErrorCode::kDisconnectedInput, "weak dual is disconnected");
  }
  out.graph = std::move(rebuilt.graph);
  return out;
}

std::vector<VertexId> face_incidence(const PlaneGraph& g, const WeakDual& wd, VertexId u) {
  if (!g.has_vertex(u)) throw Error(ErrorCode::kUnknownVertex, std::to_string(u));
  std::vector<VertexId> out;
  for (DartId d : g.rotation(u)) {
    const VertexId x = wd.face_to_vertex[g.corner_face(d)];
    if (x != kNone) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> face_incidence(const PlaneGraph& g, VertexId u) {
  return face_incidence(g, weak_dual(g), u);
}

OuterplanarityLabeling outerplanarity(const PlaneGraph& g) {
  require_connected(g, "outerplanarity");
  OuterplanarityLabeling out;
  out.vertex_label.assign(g.num_vertices(), 0);
  out.face_label.assign(g.num_faces(), 0);
  if (g.num_vertices() == 0) return out;

  // faces incident to each vertex
  std::vector<std::vector<FaceId>> incident(g.num_vertices());
  for (const Face& f : g.faces()) {
    for (VertexId v : f.boundary_vertices) incident[v].push_back(f.id);
  }
  std::vector<VertexId> layer = g.face(g.outer_face()).boundary_vertices;
  for (VertexId v : layer) out.vertex_label[v] = 1;
  int label = 1;
  while (!layer.empty()) {
    out.k = label;
    std::vector<FaceId> faces;
    for (VertexId v : layer) {
      for (FaceId f : incident[v]) {
        if (out.face_label[f] == 0) {
          out.face_label[f] = label;
          faces.push_back(f);
        }
      }
    }
    std::vector<VertexId> next;
    for (FaceId f : faces) {
      for (VertexId v : g.face(f).boundary_vertices) {
        if (out.vertex_label[v] == 0) {
          out.vertex_label[v] = label + 1;
          next.push_back(v);
        }
      }
    }
    layer = std::move(next);
    ++label;
  }
  return out;
}

std::pair<PlaneGraph, GraphMap> contract_matching(const PlaneGraph& g, const Matching& m) {
  std::vector<EdgeId> partner_edge(g.num_vertices(), kNone);
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.num_edges()) throw Error(ErrorCode::kNotAMatching, "unknown edge");
    const auto [u, v] = g.endpoints(e);
    if (u == v) throw Error(ErrorCode::kNotAMatching, "loop in matching");
    if (partner_edge[u] != kNone || partner_edge[v] != kNone) {
      throw Error(ErrorCode::kNotAMatching, "edges share an endpoint");
    }
    partner_edge[u] = partner_edge[v] = e;
    int copies = 0;
    for (DartId d : g.rotation(u)) copies += g.head(d) == v;
    if (copies > 1) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "matched edge " + std::to_string(e) + " has a parallel copy");
    }
  }

  GraphMap map;
  map.vertex_to_new.assign(g.num_vertices(), kNone);
  std::vector<std::vector<DartId>> rotation;
  auto rotation_after = [&](DartId d, std::vector<DartId>& out) {
    for (DartId x = g.rot_next(d); x != d; x = g.rot_next(x)) out.push_back(x);
  };
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (map.vertex_to_new[v] != kNone) continue;
    const VertexId id = static_cast<VertexId>(rotation.size());
    std::vector<DartId> r;
    if (partner_edge[v] == kNone) {
      r.assign(g.rotation(v).begin(), g.rotation(v).end());
      map.preimages.push_back({v});
      map.vertex_to_new[v] = id;
    } else {
      const EdgeId e = partner_edge[v];
      const DartId d = g.origin(2 * e) == v ? 2 * e : 2 * e + 1;
      const VertexId w = g.head(d);
      rotation_after(d, r);
      rotation_after(PlaneGraph::twin(d), r);
      map.preimages.push_back({v, w});
      map.vertex_to_new[v] = map.vertex_to_new[w] = id;
    }
    rotation.push_back(std::move(r));
  }
  auto rebuilt = detail::rebuild(g, rotation);
  map.edge_to_new = std::move(rebuilt.edge_to_new);
  return {std::move(rebuilt.graph), std::move(map)};
}

ParallelSimplification simplify_parallel_faces(const PlaneGraph& g) {
  ParallelSimplification out;
  out.graph = g;
  // original edge id of each edge of the current graph
  std::vector<EdgeId> original(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) original[e] = e;

  while (true) {
    const PlaneGraph& cur = out.graph;
    std::vector<char> touched(cur.num_faces(), 0);
    std::vector<char> drop(cur.num_edges(), 0);
    bool any = false;
    for (const Face& f : cur.faces()) {
      if (!f.bounded || f.boundary_walk.size() != 2 || f.length() != 2 || touched[f.id]) continue;
      const EdgeId e1 = PlaneGraph::edge_of(f.boundary_walk[0]);
      const EdgeId e2 = PlaneGraph::edge_of(f.boundary_walk[1]);
      if (e1 == e2) continue;
      // delete the copy whose far side is untouched; prefer the lower id
      for (EdgeId e : {std::min(e1, e2), std::max(e1, e2)}) {
        const DartId inside = PlaneGraph::edge_of(f.boundary_walk[0]) == e ? f.boundary_walk[0]
                                                                            : f.boundary_walk[1];
        const FaceId far = cur.face_of(PlaneGraph::twin(inside));
        if (touched[far]) continue;
        touched[far] = touched[f.id] = 1;
        drop[e] = 1;
        any = true;
        break;
      }
    }
    if (!any) break;
    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < cur.num_edges(); ++e) {
      if (drop[e]) {
        out.deleted_edges.push_back(original[e]);
      } else {
        kept.push_back(e);
      }
    }
    auto [next, step] = keep_edges(cur, kept);
    std::vector<EdgeId> next_original(next.num_edges());
    for (EdgeId e = 0; e < cur.num_edges(); ++e) {
      if (step.edge_to_new[e] != kNone) next_original[step.edge_to_new[e]] = original[e];
    }
    original = std::move(next_original);
    out.graph = std::move(next);
  }

  out.map.preimages.resize(g.num_vertices());
  out.map.vertex_to_new.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out.map.preimages[v] = {v};
    out.map.vertex_to_new[v] = v;
  }
  out.map.edge_to_new.assign(g.num_edges(), kNone);
  for (EdgeId e = 0; e < out.graph.num_edges(); ++e) out.map.edge_to_new[original[e]] = e;
  std::sort(out.deleted_edges.begin(), out.deleted_edges.end());
  return out;
}

DegreeOneStrip strip_degree_one(const PlaneGraph& g) {
  DegreeOneStrip out;
  std::vector<int> degree(g.num_vertices());
  std::vector<char> removed(g.num_vertices(), 0);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) queue.push_back(v);
  }
  int alive = g.num_vertices();
  while (!queue.empty() && alive > 1) {
    const VertexId u = queue.front();
    queue.pop_front();
    if (removed[u] || degree[u] != 1) continue;
    DartId dart = kNone;
    for (DartId d : g.rotation(u)) {
      if (!removed[g.head(d)]) dart = d;
    }
    const VertexId w = g.head(dart);
    out.log.push_back({u, w, g.face_of(dart)});
    removed[u] = 1;
    --alive;
    if (--degree[w] == 1) queue.push_back(w);
  }
  std::vector<VertexId> gone;
  for (const auto& r : out.log) gone.push_back(r.vertex);
  auto [graph, map] = delete_vertices(g, gone);
  out.graph = std::move(graph);
  out.map = std::move(map);
  return out;
}

std::string canonical_code(const PlaneGraph& g, bool keep_outer) {
  require_connected(g, "canonical_code");
  if (g.num_edges() == 0) return "v" + std::to_string(g.num_vertices());
  std::vector<DartId> starts;
  if (keep_outer) {
    starts = g.face(g.outer_face()).boundary_walk;
  } else {
    for (DartId d = 0; d < g.num_darts(); ++d) starts.push_back(d);
  }
  std::string best;
  for (DartId s : starts) {
    std::vector<int> label(g.num_vertices(), kNone);
    std::vector<DartId> entry(g.num_vertices(), kNone);
    std::vector<VertexId> order{g.origin(s)};
    label[g.origin(s)] = 0;
    entry[g.origin(s)] = s;
    std::vector<int> code;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const VertexId v = order[i];
      code.push_back(-1 - g.degree(v));
      DartId d = entry[v];
      do {
        const VertexId w = g.head(d);
        if (label[w] == kNone) {
          label[w] = static_cast<int>(order.size());
          entry[w] = PlaneGraph::twin(d);
          order.push_back(w);
        }
        const int deg = g.degree(w);
        const int offset = (g.rotation_index(PlaneGraph::twin(d)) - g.rotation_index(entry[w]) + deg) % deg;
        code.push_back(label[w]);
        code.push_back(offset);
        if (keep_outer) code.push_back(g.face_of(d) == g.outer_face());
        d = g.rot_next(d);
      } while (d != entry[v]);
    }
    std::ostringstream os;
    for (int x : code) os << x << ',';
    std::string str = os.str();
    if (best.empty() || str < best) best = std::move(str);
  }
  return best;
}

}  // namespace emw
