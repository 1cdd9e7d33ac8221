#include "emw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "emw/error.hpp"

namespace emw {
namespace {

struct Line {
  int number = 0;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

long long to_int(const std::string& tok, int line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return v;
}

// Vertex sequence of a face walk, rotated to its lexicographically smallest form.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> seq) {
  if (seq.empty()) return seq;
  std::vector<VertexId> best = seq;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    if (seq < best) best = seq;
  }
  return best;
}

std::vector<VertexId> walk_origins(const PlaneGraph& g, const Face& f) {
  std::vector<VertexId> out;
  for (DartId d : f.boundary_walk) out.push_back(g.origin(d));
  return out;
}

// Offsets for the writer. Parallel u-v copies pair correctly iff the first
// copy in u's written list is the last in v's, i.e. both lists start inside
// the same lens; such starts always exist for a plane multigraph. Loops need
// their two darts to be consecutive loop occurrences.
class OffsetSearch {
 public:
  explicit OffsetSearch(const PlaneGraph& g) : g_(g), offset_(g.num_vertices(), 0) {}

  std::vector<int> run() {
    const int n = g_.num_vertices();
    multi_.assign(n, {});
    std::vector<bool> needs(n, false);
    for (VertexId v = 0; v < n; ++v) {
      std::map<VertexId, int> count;
      for (DartId d : g_.rotation(v)) ++count[g_.head(d)];
      for (const auto& [u, c] : count) {
        if (u == v && c >= 4) needs[v] = true;
        if (u != v && c >= 2) {
          needs[v] = true;
          multi_[v].push_back(u);
        }
      }
    }
    // BFS order over the multi-neighbour graph so constraints bite early.
    std::vector<bool> queued(n, false);
    for (VertexId s = 0; s < n; ++s) {
      if (!needs[s] || queued[s]) continue;
      queued[s] = true;
      std::vector<VertexId> q{s};
      for (std::size_t h = 0; h < q.size(); ++h) {
        order_.push_back(q[h]);
        for (VertexId u : multi_[q[h]]) {
          if (!queued[u]) {
            queued[u] = true;
            q.push_back(u);
          }
        }
      }
    }
    assigned_.assign(n, false);
    if (!place(0)) {
      throw Error(ErrorCode::kNotRepresentable, "no list offsets reproduce the parallel-edge pairing");
    }
    return offset_;
  }

 private:
  EdgeId first_edge(VertexId v, VertexId u, int s) const {
    const auto rot = g_.rotation(v);
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      const DartId d = rot[(s + i) % deg];
      if (g_.head(d) == u) return PlaneGraph::edge_of(d);
    }
    return kNone;
  }

  EdgeId last_edge(VertexId v, VertexId u, int s) const {
    const auto rot = g_.rotation(v);
    const int deg = static_cast<int>(rot.size());
    for (int i = deg - 1; i >= 0; --i) {
      const DartId d = rot[(s + i) % deg];
      if (g_.head(d) == u) return PlaneGraph::edge_of(d);
    }
    return kNone;
  }

  bool loops_ok(VertexId v, int s) const {
    const auto rot = g_.rotation(v);
    const int deg = static_cast<int>(rot.size());
    std::vector<EdgeId> seen;
    for (int i = 0; i < deg; ++i) {
      const DartId d = rot[(s + i) % deg];
      if (g_.head(d) == v) seen.push_back(PlaneGraph::edge_of(d));
    }
    for (std::size_t i = 0; i + 1 < seen.size(); i += 2) {
      if (seen[i] != seen[i + 1]) return false;
    }
    return true;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    if (++steps_ > kBudget) return false;
    const VertexId v = order_[idx];
    for (int s = 0; s < g_.degree(v); ++s) {
      if (!loops_ok(v, s)) continue;
      bool ok = true;
      for (VertexId u : multi_[v]) {
        if (assigned_[u] && first_edge(v, u, s) != last_edge(u, v, offset_[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      offset_[v] = s;
      assigned_[v] = true;
      if (place(idx + 1)) return true;
      assigned_[v] = false;
    }
    offset_[v] = 0;
    return false;
  }

  static constexpr long kBudget = 2'000'000;
  const PlaneGraph& g_;
  std::vector<int> offset_;
  std::vector<std::vector<VertexId>> multi_;
  std::vector<VertexId> order_;
  std::vector<bool> assigned_;
  long steps_ = 0;
};

// Position of twin(d) in its origin's written list, for every dart in
// written order. Two graphs with equal signatures have the same embedding.
std::vector<std::vector<int>> pairing_signature(const PlaneGraph& g, const std::vector<int>& offset) {
  std::vector<std::vector<int>> sig(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto rot = g.rotation(v);
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      const DartId t = PlaneGraph::twin(rot[(offset[v] + i) % deg]);
      const VertexId h = g.origin(t);
      sig[v].push_back((g.rotation_index(t) - offset[h] + g.degree(h)) % g.degree(h));
    }
  }
  return sig;
}

int declared_size(const TreeDecomposition& t) { return t.num_nodes() == 0 ? 0 : width(t) + 1; }

}  // namespace

PlaneGraph parse_plane_graph(std::istream& in) {
  std::vector<Line> lines;
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) lines.push_back({number, std::move(t)});
  }

  std::map<VertexId, std::pair<int, std::vector<VertexId>>> rows;  // vertex -> (line, neighbours)
  std::optional<Line> outer_line;
  std::vector<VertexId> outer_seq;
  for (const Line& l : lines) {
    if (outer_line) throw ParseError(l.number, "the outer: line must come last");
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError(l.number, "missing ':'");
    const std::string head = trim(l.text.substr(0, colon));
    std::vector<VertexId> ids;
    for (const auto& tok : tokens(l.text.substr(colon + 1))) {
      const long long x = to_int(tok, l.number);
      if (x < 0 || x > 100'000'000) throw ParseError(l.number, "vertex id out of range: " + tok);
      ids.push_back(static_cast<VertexId>(x));
    }
    if (head == "outer") {
      outer_line = l;
      outer_seq = std::move(ids);
      continue;
    }
    const long long v = to_int(head, l.number);
    if (v < 0 || v > 100'000'000) throw ParseError(l.number, "vertex id out of range: " + head);
    if (!rows.emplace(static_cast<VertexId>(v), std::make_pair(l.number, std::move(ids))).second) {
      throw ParseError(l.number, "vertex " + head + " listed twice");
    }
  }

  const int n = rows.empty() ? 0 : rows.rbegin()->first + 1;
  if (static_cast<int>(rows.size()) != n) {
    for (VertexId v = 0; v < n; ++v) {
      if (!rows.count(v)) throw ParseError(number, "no line for vertex " + std::to_string(v));
    }
  }
  std::vector<std::vector<VertexId>> lists(n);
  std::vector<std::map<VertexId, int>> count(n);
  for (auto& [v, row] : rows) {
    for (VertexId u : row.second) {
      if (u >= n) throw ParseError(row.first, "unknown neighbour " + std::to_string(u));
      ++count[v][u];
    }
    lists[v] = row.second;
  }
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& [u, c] : count[v]) {
      if (u == v && c % 2 != 0) throw ParseError(rows[v].first, "self-loop listed an odd number of times");
      if (u != v) {
        const auto it = count[u].find(v);
        if (it == count[u].end() || it->second != c) {
          throw ParseError(rows[v].first, "edge " + std::to_string(v) + "-" + std::to_string(u) +
                                              " is not listed symmetrically");
        }
      }
    }
  }

  PlaneGraph g = build_embedding(lists);
  if (!outer_line || (outer_seq.size() <= 1 && g.num_edges() == 0)) return g;
  const auto want = canonical_cycle(outer_seq);
  for (const Face& f : g.faces()) {
    if (f.boundary_walk.empty()) continue;
    if (canonical_cycle(walk_origins(g, f)) == want) {
      const DartId d = f.boundary_walk.front();
      return build_embedding(lists, std::make_pair(g.origin(d), g.rotation_index(d)));
    }
  }
  throw ParseError(outer_line->number, "outer: does not match any face boundary walk");
}

PlaneGraph parse_plane_graph(const std::string& text) {
  std::istringstream is(text);
  return parse_plane_graph(is);
}

std::string print_plane_graph(const PlaneGraph& g) {
  const std::vector<int> offset = OffsetSearch(g).run();
  std::vector<std::vector<VertexId>> lists(g.num_vertices());
  std::ostringstream os;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    os << v << ':';
    const auto rot = g.rotation(v);
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      lists[v].push_back(g.head(rot[(offset[v] + i) % deg]));
      os << ' ' << lists[v].back();
    }
    os << '\n';
  }
  // the search only checks first copies; confirm the whole pairing
  const PlaneGraph back = build_embedding(lists);
  if (pairing_signature(back, std::vector<int>(g.num_vertices(), 0)) != pairing_signature(g, offset)) {
    throw Error(ErrorCode::kNotRepresentable, "rotation pairing cannot be expressed in .pg");
  }
  if (g.num_edges() > 0 && g.outer_face() != kNone) {
    os << "outer:";
    for (VertexId v : canonical_cycle(walk_origins(g, g.face(g.outer_face())))) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

TreeDecomposition parse_tree_decomposition(std::istream& in, int* num_vertices) {
  TreeDecomposition t;
  bool header = false;
  long long nodes = 0, declared = 0, verts = 0;
  std::vector<bool> seen;
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const auto tok = tokens(raw);
    if (tok.empty() || tok[0] == "c") continue;
    if (!header) {
      if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td") {
        throw ParseError(number, "expected header 's td <nodes> <width+1> <vertices>'");
      }
      nodes = to_int(tok[2], number);
      declared = to_int(tok[3], number);
      verts = to_int(tok[4], number);
      if (nodes < 0 || declared < 0 || verts < 0 || nodes > 50'000'000 || verts > 100'000'000) {
        throw ParseError(number, "header values out of range");
      }
      t.bags.assign(nodes, {});
      seen.assign(nodes, false);
      header = true;
      continue;
    }
    if (tok[0] == "s") throw ParseError(number, "second header");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(number, "bag line without id");
      const long long id = to_int(tok[1], number);
      if (id < 1 || id > nodes) throw ParseError(number, "bag id out of range");
      if (seen[id - 1]) throw ParseError(number, "bag " + tok[1] + " given twice");
      seen[id - 1] = true;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const long long v = to_int(tok[i], number);
        if (v < 1 || v > verts) throw ParseError(number, "vertex out of range: " + tok[i]);
        t.bags[id - 1].push_back(static_cast<VertexId>(v - 1));
      }
      if (static_cast<long long>(t.bags[id - 1].size()) > declared) {
        throw ParseError(number, "bag larger than the declared width+1");
      }
      continue;
    }
    if (tok.size() != 2) throw ParseError(number, "expected a tree edge 'i j'");
    const long long a = to_int(tok[0], number), b = to_int(tok[1], number);
    if (a < 1 || a > nodes || b < 1 || b > nodes) throw ParseError(number, "tree edge names an unknown bag");
    t.add_tree_edge(static_cast<NodeId>(a - 1), static_cast<NodeId>(b - 1));
  }
  if (!header) throw ParseError(number == 0 ? 1 : number, "missing header");
  for (long long i = 0; i < nodes; ++i) {
    if (!seen[i]) throw ParseError(number, "bag " + std::to_string(i + 1) + " is missing");
  }
  if (declared_size(t) != declared) throw ParseError(number, "declared width+1 does not match the largest bag");
  if (num_vertices) *num_vertices = static_cast<int>(verts);
  return t;
}

TreeDecomposition parse_tree_decomposition(const std::string& text, int* num_vertices) {
  std::istringstream is(text);
  return parse_tree_decomposition(is, num_vertices);
}

std::string print_tree_decomposition(const TreeDecomposition& t, int num_vertices) {
  std::ostringstream os;
  os << "s td " << t.num_nodes() << ' ' << declared_size(t) << ' ' << num_vertices << '\n';
  for (NodeId i = 0; i < t.num_nodes(); ++i) {
    os << "b " << i + 1;
    for (VertexId v : t.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (const auto& [a, b] : t.tree_edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw Error(ErrorCode::kParseError, "cannot write " + path);
}

}  // namespace emw
