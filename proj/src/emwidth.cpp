#include "emw/emwidth.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "emw/error.hpp"
#include "emw/matching.hpp"
#include "emw/treewidth.hpp"

namespace emw {

namespace {

using Kind = ReductionStage::Kind;

ReductionStage strip_stage(const PlaneGraph& g, PlaneGraph& out) {
  DegreeOneStrip s = strip_degree_one(g);
  ReductionStage st;
  st.kind = Kind::kStrip;
  st.vertices_before = g.num_vertices();
  st.edges_before = g.num_edges();
  std::vector<char> face_used(g.num_faces(), 0);
  for (const auto& r : s.log) {
    if (g.face(r.face).bounded && !face_used[r.face]) {
      face_used[r.face] = 1;
      st.face_bags.push_back(g.face(r.face).boundary_vertices);
    }
  }
  st.removals = std::move(s.log);
  st.map = std::move(s.map);
  out = std::move(s.graph);
  return st;
}

ReductionStage compress_stage(const PlaneGraph& g, PlaneGraph& out) {
  ReductionStage st;
  st.kind = Kind::kCompress;
  st.vertices_before = g.num_vertices();
  st.edges_before = g.num_edges();
  std::vector<VertexId> removed;
  for (const RFamily& fam : find_r_families(g, 3)) {
    if (!fam.nicely_embedded) continue;
    // maximal runs of members joined by single-face lenses
    int start = 0;
    for (int i = 1; i <= fam.r(); ++i) {
      if (i < fam.r() && fam.lens[i - 1] == LensKind::kJoined) continue;
      if (i - start >= 3) {
        CompressedRun run{fam.a, fam.b, {fam.members.begin() + start, fam.members.begin() + i}};
        removed.insert(removed.end(), run.members.begin() + 1, run.members.end() - 1);
        st.runs.push_back(std::move(run));
      }
      start = i;
    }
  }
  auto [h, map] = delete_vertices(g, removed);
  st.map = std::move(map);
  out = std::move(h);
  return st;
}

ReductionStage contract_stage(const PlaneGraph& g, PlaneGraph& out) {
  ReductionStage st;
  st.kind = Kind::kContract;
  st.vertices_before = g.num_vertices();
  st.edges_before = g.num_edges();
  // edges with a parallel copy would turn into loops
  std::map<std::pair<VertexId, VertexId>, int> multiplicity;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    ++multiplicity[{std::min(u, v), std::max(u, v)}];
  }
  std::vector<char> used(g.num_vertices(), 0);
  Matching m;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u == v || used[u] || used[v] || multiplicity[{std::min(u, v), std::max(u, v)}] > 1) continue;
    used[u] = used[v] = 1;
    m.edges.push_back(e);
  }
  auto [h, map] = contract_matching(g, m);
  st.edges = m.edges;
  st.map = std::move(map);
  out = std::move(h);
  return st;
}

ReductionStage parallel_stage(const PlaneGraph& g, PlaneGraph& out) {
  ParallelSimplification p = simplify_parallel_faces(g);
  ReductionStage st;
  st.kind = Kind::kParallel;
  st.vertices_before = g.num_vertices();
  st.edges_before = g.num_edges();
  st.edges = std::move(p.deleted_edges);
  st.map = std::move(p.map);
  out = std::move(p.graph);
  return st;
}

/// Node of t whose bag holds all of vs.
NodeId bag_with(const TreeDecomposition& t, const std::vector<VertexId>& vs, ErrorCode missing) {
  if (auto node = t.find_bag_containing(vs)) return *node;
  std::ostringstream msg;
  msg << "no bag contains {";
  for (std::size_t i = 0; i < vs.size(); ++i) msg << (i ? "," : "") << vs[i];
  msg << "}";
  throw Error(missing, msg.str());
}

TreeDecomposition expand_stage(const TreeDecomposition& t, const ReductionStage& st) {
  TreeDecomposition out = t.relabeled(st.map.preimages);
  switch (st.kind) {
    case Kind::kContract:
    case Kind::kParallel:
      break;
    case Kind::kCompress:
      for (const CompressedRun& run : st.runs) {
        const VertexId last = run.members.back();
        NodeId at = bag_with(out, {run.a, run.b, run.members.front(), last}, ErrorCode::kBagForFamilyMissing);
        for (std::size_t i = 0; i + 2 < run.members.size(); ++i) {
          const NodeId node = out.add_node({run.a, run.b, run.members[i], run.members[i + 1], last});
          out.add_tree_edge(at, node);
          at = node;
        }
      }
      break;
    case Kind::kStrip: {
      for (const auto& boundary : st.face_bags) {
        std::vector<VertexId> survivors;
        for (VertexId v : boundary) {
          if (st.map.vertex_to_new[v] != kNone) survivors.push_back(v);
        }
        const NodeId at = bag_with(out, survivors, ErrorCode::kInvalidInputDecomposition);
        out.add_tree_edge(at, out.add_node(boundary));
      }
      // removals in the outer face hang off their neighbour, last removed first
      for (auto it = st.removals.rbegin(); it != st.removals.rend(); ++it) {
        if (out.find_bag_containing({it->vertex}).has_value()) continue;
        const NodeId at = bag_with(out, {it->neighbor}, ErrorCode::kInvalidInputDecomposition);
        out.add_tree_edge(at, out.add_node({it->vertex, it->neighbor}));
      }
      break;
    }
  }
  return out;
}

void require_input(const PlaneGraph& g) {
  if (g.has_self_loops()) throw Error(ErrorCode::kSelfLoopInput, "self-loops are not supported");
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnectedInput, "input must be connected");
}

/// Exact search on the facial completion.
std::optional<TreeDecomposition> exact_at_most(const PlaneGraph& g, int k, const EmwConfig& cfg) {
  if (g.num_vertices() == 0) return TreeDecomposition{};
  const AbstractGraph completion = facial_completion(g);
  auto r = treewidth_at_most(completion, k, SearchLimits{.vertex_cap = cfg.improve_cap, .state_budget = cfg.state_budget});
  if (!r) return std::nullopt;
  return std::move(r->decomposition);
}

struct Solver {
  const EmwConfig& cfg;
  int k;
  EmwTrace& trace;

  std::optional<TreeDecomposition> solve(const PlaneGraph& g, int depth) {
    if (g.num_vertices() <= cfg.base_case_size) {
      trace.base_case_vertices = g.num_vertices();
      return exact_at_most(g, k, cfg);
    }
    auto [reduced, script] = reduce_instance(g);
    LevelStats stats;
    stats.depth = depth;
    stats.n_before = g.num_vertices();
    stats.m_before = g.num_edges();
    stats.n_after = reduced.num_vertices();
    stats.m_after = reduced.num_edges();
    for (const auto& st : script.stages) {
      switch (st.kind) {
        case Kind::kStrip: stats.stripped = static_cast<int>(st.removals.size()); break;
        case Kind::kCompress:
          for (const auto& run : st.runs) stats.compressed += static_cast<int>(run.members.size()) - 2;
          break;
        case Kind::kContract: stats.matched = static_cast<int>(st.edges.size()); break;
        case Kind::kParallel: stats.parallel_deleted = static_cast<int>(st.edges.size()); break;
      }
    }
    const std::size_t level = trace.levels.size();
    trace.levels.push_back(stats);
    trace.scripts.push_back(script);

    if (reduced.num_vertices() == g.num_vertices()) {
      // nothing shrank: hand the whole instance to the improver
      trace.levels[level].improved = true;
      trace.base_case_vertices = g.num_vertices();
      return exact_at_most(g, k, cfg);
    }
    std::optional<TreeDecomposition> sub = solve(reduced, depth + 1);
    if (!sub) return std::nullopt;
    TreeDecomposition t = expand_decomposition(*sub, script);
    const int w = t.num_nodes() ? width(t) : -1;
    trace.levels[level].expanded_width = w;
    const int sub_width = sub->num_nodes() ? width(*sub) : -1;
    trace.levels[level].width_bound = std::max(g.max_bounded_face_length() + 1, 2 * sub_width + 2) - 1;
    if (w <= k) return t;
    trace.levels[level].improved = true;
    return exact_at_most(g, k, cfg);
  }
};

}  // namespace

std::pair<PlaneGraph, ReductionScript> reduce_instance(const PlaneGraph& g) {
  ReductionScript script;
  PlaneGraph g1, g2, g3, g4;
  script.stages.push_back(strip_stage(g, g1));
  script.stages.push_back(compress_stage(g1, g2));
  script.stages.push_back(contract_stage(g2, g3));
  script.stages.push_back(parallel_stage(g3, g4));
  return {std::move(g4), std::move(script)};
}

TreeDecomposition expand_decomposition(const TreeDecomposition& t, const ReductionScript& script) {
  TreeDecomposition out = t;
  for (auto it = script.stages.rbegin(); it != script.stages.rend(); ++it) {
    for (const auto& bag : out.bags) {
      for (VertexId v : bag) {
        if (v < 0 || v >= static_cast<VertexId>(it->map.preimages.size())) {
          throw Error(ErrorCode::kInvalidInputDecomposition, "bag names vertex " + std::to_string(v));
        }
      }
    }
    out = expand_stage(out, *it);
  }
  return out;
}

EmWidthAnswer decide_emwidth(const PlaneGraph& g, int k, const EmwConfig& cfg) {
  require_input(g);
  if (k < 1) throw Error(ErrorCode::kPreconditionViolated, "k must be at least 1");
  EmWidthAnswer ans;
  if (g.max_bounded_face_length() > k + 1) {
    ans.trace.early_face_reject = true;
    return ans;
  }
  Solver solver{cfg, k, ans.trace};
  if (auto t = solver.solve(g, 0)) {
    ans.yes = true;
    ans.width = t->num_nodes() ? width(*t) : -1;
    ans.decomposition = std::move(t);
  }
  return ans;
}

EmWidthAnswer improve_decomposition(const PlaneGraph& g, const TreeDecomposition& t, int k, const EmwConfig& cfg) {
  const ValidationReport report = validate_em_decomposition(g, t);
  if (!report.ok()) throw Error(ErrorCode::kInvalidInputDecomposition, "input is not an em-decomposition");
  EmWidthAnswer ans;
  if (report.width <= k) {
    ans.yes = true;
    ans.width = report.width;
    ans.decomposition = t;
    return ans;
  }
  if (auto better = exact_at_most(g, k, cfg)) {
    ans.yes = true;
    ans.width = better->num_nodes() ? width(*better) : -1;
    ans.decomposition = std::move(better);
  }
  return ans;
}

ExactEmWidth exact_emwidth(const PlaneGraph& g, int vertex_cap) {
  auto r = exact_treewidth(facial_completion(g), SearchLimits{.vertex_cap = vertex_cap});
  return {r.width, std::move(r.decomposition)};
}

std::string format_trace(const EmwTrace& trace) {
  std::ostringstream out;
  if (trace.early_face_reject) out << "reject: a bounded face is longer than k+1\n";
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    const LevelStats& s = trace.levels[i];
    out << "level " << s.depth << ": n " << s.n_before << " -> " << s.n_after << ", m " << s.m_before << " -> "
        << s.m_after << "; stripped " << s.stripped << ", compressed " << s.compressed << ", matched " << s.matched
        << ", parallel " << s.parallel_deleted << "; expanded width " << s.expanded_width << " (bound "
        << s.width_bound << ")" << (s.improved ? ", improved" : "") << "\n";
    if (i < trace.scripts.size()) {
      for (const auto& st : trace.scripts[i].stages) {
        switch (st.kind) {
          case ReductionStage::Kind::kStrip:
            for (const auto& r : st.removals)
              out << "  strip " << r.vertex << " (neighbour " << r.neighbor << ", face " << r.face << ")\n";
            break;
          case ReductionStage::Kind::kCompress:
            for (const auto& run : st.runs) {
              out << "  compress hubs " << run.a << "," << run.b << " members";
              for (VertexId v : run.members) out << " " << v;
              out << "\n";
            }
            break;
          case ReductionStage::Kind::kContract:
            for (EdgeId e : st.edges) out << "  contract edge " << e << "\n";
            break;
          case ReductionStage::Kind::kParallel:
            for (EdgeId e : st.edges) out << "  drop parallel edge " << e << "\n";
            break;
        }
      }
    }
  }
  if (trace.base_case_vertices >= 0) out << "base case: " << trace.base_case_vertices << " vertices\n";
  return out.str();
}

}  // namespace emw
