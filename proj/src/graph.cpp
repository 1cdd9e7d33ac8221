#include "emw/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "emw/error.hpp"

namespace emw {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInconsistentRotation: return "InconsistentRotation";
    case ErrorCode::kNonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotAMatching: return "NotAMatching";
    case ErrorCode::kForeignVertexInBag: return "ForeignVertexInBag";
    case ErrorCode::kEmptyDecomposition: return "EmptyDecomposition";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kStaleFamily: return "StaleFamily";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kInvalidInputDecomposition: return "InvalidInputDecomposition";
    case ErrorCode::kBagForFamilyMissing: return "BagForFamilyMissing";
    case ErrorCode::kSelfLoopInput: return "SelfLoopInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotRepresentable: return "NotRepresentable";
  }
  return "Unknown";
}

EdgeId AbstractGraph::add_edge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex, "edge endpoint out of range");
  }
  const EdgeId e = num_edges();
  edges_.emplace_back(u, v);
  adjacency_[u].push_back(e);
  adjacency_[v].push_back(e);
  return e;
}

bool AbstractGraph::has_edge(VertexId u, VertexId v) const {
  const VertexId a = degree(u) <= degree(v) ? u : v;
  const VertexId b = a == u ? v : u;
  return std::any_of(adjacency_[a].begin(), adjacency_[a].end(),
                     [&](EdgeId e) { return other(e, a) == b; });
}

bool AbstractGraph::is_connected() const {
  if (num_vertices() <= 1) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : adjacency_[v]) {
      const VertexId w = other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices();
}

AbstractGraph AbstractGraph::induced(const std::vector<VertexId>& keep) const {
  std::vector<int> index(num_vertices(), kNone);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  AbstractGraph out(static_cast<int>(keep.size()));
  for (const auto& [u, v] : edges_) {
    if (index[u] != kNone && index[v] != kNone) out.add_edge(index[u], index[v]);
  }
  return out;
}

AbstractGraph AbstractGraph::simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  AbstractGraph out(num_vertices());
  for (auto [u, v] : edges_) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.emplace(u, v).second) out.add_edge(u, v);
  }
  return out;
}

bool is_matching(const AbstractGraph& g, const Matching& m) {
  std::vector<char> used(g.num_vertices(), 0);
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    const auto [u, v] = g.edge(e);
    if (u == v || used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

}  // namespace emw
