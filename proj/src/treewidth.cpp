#include "emw/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "emw/error.hpp"

namespace emw {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

class EliminationSearch {
 public:
  EliminationSearch(const AbstractGraph& g, std::size_t budget)
      : n_(g.num_vertices()), adj_(n_, 0), budget_(budget) {
    for (auto [u, v] : g.edges()) {
      if (u == v) continue;
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    }
    all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  std::optional<std::vector<VertexId>> run(int k) {
    k_ = k;
    dead_.clear();
    order_.clear();
    if (search(0)) return order_;
    return std::nullopt;
  }

 private:
  // Neighbours of v in the graph left after eliminating `eliminated`.
  Mask q_set(Mask eliminated, int v) const {
    Mask comp = bit(v);
    Mask frontier = bit(v);
    Mask reach = 0;
    while (frontier) {
      Mask nb = 0;
      for (Mask f = frontier; f; f &= f - 1) nb |= adj_[std::countr_zero(f)];
      reach |= nb;
      frontier = nb & eliminated & ~comp;
      comp |= frontier;
    }
    return reach & ~eliminated & ~bit(v);
  }

  bool search(Mask eliminated) {
    const Mask rest = all_ & ~eliminated;
    if (std::popcount(rest) <= k_ + 1) {
      for (Mask r = rest; r; r &= r - 1) order_.push_back(std::countr_zero(r));
      return true;
    }
    if (dead_.count(eliminated)) return false;

    struct Candidate {
      int vertex;
      int fill;
      int degree;
    };
    std::vector<Candidate> candidates;
    for (Mask r = rest; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const Mask q = q_set(eliminated, v);
      const int degree = std::popcount(q);
      if (degree > k_) continue;
      int fill = 0;
      for (Mask a = q; a; a &= a - 1) {
        const int u = std::countr_zero(a);
        fill += std::popcount(q & ~q_set(eliminated, u) & ~bit(u));
      }
      fill /= 2;
      if (fill == 0) {
        // simplicial vertices can always be eliminated first
        candidates.assign(1, {v, 0, degree});
        break;
      }
      candidates.push_back({v, fill, degree});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.fill != b.fill) return a.fill < b.fill;
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.vertex < b.vertex;
    });
    for (const Candidate& c : candidates) {
      order_.push_back(c.vertex);
      if (search(eliminated | bit(c.vertex))) return true;
      order_.pop_back();
    }
    dead_.insert(eliminated);
    if (dead_.size() > budget_) {
      throw Error(ErrorCode::kInstanceTooLarge, "treewidth search exceeded its state budget");
    }
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  std::size_t budget_;
  int k_ = 0;
  std::unordered_set<Mask> dead_;
  std::vector<VertexId> order_;
};

void check_size(const AbstractGraph& g, const SearchLimits& limits) {
  const int cap = std::min(limits.vertex_cap, kMaxSearchVertices);
  if (g.num_vertices() > cap) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(g.num_vertices()) + " vertices exceed the cap of " + std::to_string(cap));
  }
}

TreewidthResult from_order(const AbstractGraph& g, std::vector<VertexId> order) {
  TreewidthResult r;
  r.decomposition = decomposition_from_order(g, order);
  r.width = r.decomposition.num_nodes() == 0 ? -1 : width(r.decomposition);
  r.elimination_order = std::move(order);
  return r;
}

}  // namespace

TreewidthResult min_fill_decomposition(const AbstractGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::set<VertexId>> nbrs(n);
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    nbrs[u].insert(v);
    nbrs[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<VertexId> order;
  for (int step = 0; step < n; ++step) {
    VertexId best = kNone;
    long best_fill = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto a = nbrs[v].begin(); a != nbrs[v].end(); ++a) {
        for (auto b = std::next(a); b != nbrs[v].end(); ++b) fill += !nbrs[*a].count(*b);
      }
      if (best == kNone || fill < best_fill ||
          (fill == best_fill && nbrs[v].size() < nbrs[best].size())) {
        best = v;
        best_fill = fill;
      }
    }
    gone[best] = 1;
    order.push_back(best);
    for (VertexId a : nbrs[best]) {
      nbrs[a].erase(best);
      for (VertexId b : nbrs[best]) {
        if (a != b) nbrs[a].insert(b);
      }
    }
    nbrs[best].clear();
  }
  return from_order(g, std::move(order));
}

int treewidth_lower_bound(const AbstractGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return -1;
  std::vector<std::set<VertexId>> nbrs(n);
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    nbrs[u].insert(v);
    nbrs[v].insert(u);
  }
  std::vector<char> alive(n, 1);
  int remaining = n;
  int lb = 0;
  while (remaining > 1) {
    VertexId v = kNone;
    for (VertexId x = 0; x < n; ++x) {
      if (alive[x] && (v == kNone || nbrs[x].size() < nbrs[v].size())) v = x;
    }
    lb = std::max(lb, static_cast<int>(nbrs[v].size()));
    alive[v] = 0;
    --remaining;
    if (nbrs[v].empty()) continue;
    VertexId w = *nbrs[v].begin();
    for (VertexId x : nbrs[v]) {
      if (nbrs[x].size() < nbrs[w].size()) w = x;
    }
    // contract v into w
    for (VertexId x : nbrs[v]) {
      nbrs[x].erase(v);
      if (x != w) {
        nbrs[x].insert(w);
        nbrs[w].insert(x);
      }
    }
    nbrs[v].clear();
  }
  return lb;
}

std::optional<TreewidthResult> treewidth_at_most(const AbstractGraph& g, int k, SearchLimits limits) {
  const int n = g.num_vertices();
  if (n == 0) return TreewidthResult{};
  if (k < 0) return std::nullopt;
  TreewidthResult heuristic = min_fill_decomposition(g);
  if (heuristic.width <= k) return heuristic;
  if (treewidth_lower_bound(g) > k) return std::nullopt;
  check_size(g, limits);
  EliminationSearch search(g, limits.state_budget);
  auto order = search.run(k);
  if (!order) return std::nullopt;
  return from_order(g, std::move(*order));
}

TreewidthResult exact_treewidth(const AbstractGraph& g, SearchLimits limits) {
  check_size(g, limits);
  const int n = g.num_vertices();
  if (n == 0) return TreewidthResult{};
  TreewidthResult best = min_fill_decomposition(g);
  const int lb = treewidth_lower_bound(g);
  if (lb >= best.width) return best;
  EliminationSearch search(g, limits.state_budget);
  for (int k = lb; k < best.width; ++k) {
    if (auto order = search.run(k)) return from_order(g, std::move(*order));
  }
  return best;
}

}  // namespace emw
