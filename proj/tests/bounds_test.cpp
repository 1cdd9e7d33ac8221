#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "emw/bounds.hpp"
#include "emw/error.hpp"
#include "emw/treewidth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace emw;
using namespace emw::fixtures;

namespace {

/// two triangles sharing vertex 0, side by side
PlaneGraph bowtie() { return build_embedding({{2, 1, 4, 3}, {0, 2}, {1, 0}, {0, 4}, {3, 0}}); }

/// triangle with a pendant vertex 3 hanging outside from 0
PlaneGraph triangle_pendant() { return build_embedding({{2, 3, 1}, {0, 2}, {1, 0}, {0}}); }

/// block-cut structure must be a tree: blocks + cut vertices, edges by membership
bool block_cut_tree(const PseudoBlockDecomposition& d, int n) {
  int nodes = static_cast<int>(d.blocks.size() + d.cut_vertices.size());
  int edges = 0;
  std::set<VertexId> cuts(d.cut_vertices.begin(), d.cut_vertices.end());
  for (const auto& b : d.blocks) {
    for (VertexId v : b.vertices) edges += cuts.count(v);
  }
  (void)n;
  return edges == nodes - 1 && d.links.size() + 1 == d.blocks.size();
}

}  // namespace

TEST_CASE("pseudo blocks of small graphs") {
  const auto bt = pseudo_block_decomposition(bowtie());
  CHECK(bt.blocks.size() == 2);
  CHECK(bt.cut_vertices == std::vector<VertexId>{0});

  CHECK(pseudo_block_decomposition(cycle(4)).blocks.size() == 1);

  const auto tp = pseudo_block_decomposition(triangle_pendant());
  REQUIRE(tp.blocks.size() == 2);
  CHECK(std::count_if(tp.blocks.begin(), tp.blocks.end(), [](const PseudoBlock& b) { return b.single_edge(); }) == 1);

  CHECK(pseudo_block_decomposition(path(5)).blocks.size() == 4);
}

TEST_CASE("pseudo blocks partition the edges and form a tree") {
  for (int seed = 0; seed < 100; ++seed) {
    const PlaneGraph g = corpus::random_plane_graph({.n = 2 + seed % 14}, 40 + seed);
    const auto d = pseudo_block_decomposition(g);
    std::vector<int> hits(g.num_edges(), 0);
    for (const auto& b : d.blocks) {
      for (EdgeId e : b.edges) ++hits[e];
      if (!b.single_edge()) {
        const auto bg = block_graph(g, b).first;
        CHECK(weak_dual(bg).graph.is_connected());
      }
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(block_cut_tree(d, g.num_vertices()));
  }
}

TEST_CASE("weak-dual upper bound examples") {
  const auto c4 = emw_upper_weak_dual(cycle(4));
  CHECK(c4.decomposition.num_nodes() == 1);
  CHECK(width(c4.decomposition) == 3);

  const auto g23 = emw_upper_weak_dual(grid(2, 3));
  // the weak dual is one edge, so its optimal decomposition is a single bag
  // holding both faces: six vertices
  CHECK(width(g23.decomposition) == 5);
  CHECK(width(g23.decomposition) <= (2 + 2) * 4 - 1);
  CHECK(validate_em_decomposition(grid(2, 3), g23.decomposition).ok());

  // 4-cycle with a path of two edges hanging off vertex 0 on the outside
  const PlaneGraph tail = build_embedding({{3, 4, 1}, {0, 2}, {1, 3}, {2, 0}, {0, 5}, {4}});
  const auto t = emw_upper_weak_dual(tail);
  CHECK(validate_em_decomposition(tail, t.decomposition).ok());
  CHECK(width(t.decomposition) == 3);

  CHECK(width(emw_upper_weak_dual(build_embedding({{}})).decomposition) == 0);
}

TEST_CASE("outerplanar upper bound examples") {
  const auto c4 = emw_upper_outerplanar(cycle(4));
  CHECK(c4.bound() == 11);
  CHECK(width(c4.decomposition) == 3);

  const auto g33 = emw_upper_outerplanar(grid(3, 3));
  CHECK(g33.outerplanarity_k == 2);
  CHECK(width(g33.decomposition) <= 23);
  CHECK(validate_em_decomposition(grid(3, 3), g33.decomposition).ok());

  const auto t = emw_upper_outerplanar(triangle());
  CHECK(t.bound() == 8);
  CHECK(width(t.decomposition) == 2);
}

TEST_CASE("upper bounds hold on random graphs") {
  for (int seed = 0; seed < 150; ++seed) {
    const PlaneGraph g = corpus::random_plane_graph({.n = 2 + seed % 11}, 900 + seed);
    const auto ub = emw_upper_outerplanar(g);
    const auto report = validate_em_decomposition(g, ub.decomposition);
    CHECK(report.ok());
    const int tw = exact_treewidth(g.underlying()).width;
    const int l = std::max(g.max_bounded_face_length(), 2);
    CHECK(report.width <= (tw + 2) * l - 1);
    CHECK(report.width <= 3 * ub.outerplanarity_k * l - 1);
    CHECK(report.width >= oracle::emwidth(g));
  }
}

TEST_CASE("weak dual treewidth is at most one more") {
  for (int seed = 0; seed < 120; ++seed) {
    const PlaneGraph g = corpus::random_plane_graph({.n = 2 + seed % 11}, 2300 + seed);
    const WeakDual wd = weak_dual(g);
    CHECK(exact_treewidth(wd.graph).width <= exact_treewidth(g.underlying()).width + 1);
  }
}

TEST_CASE("gadget construction") {
  const PlaneGraph c4 = generate_gadget({.p = 2, .q = 2, .k = 1});
  CHECK(c4.num_vertices() == 4);
  CHECK(c4.num_edges() == 4);

  const PlaneGraph g = generate_gadget({.p = 3, .q = 5, .k = 2});
  CHECK(g.num_vertices() == 25);
  int bounded = 0;
  for (const Face& f : g.faces()) {
    if (!f.bounded) continue;
    ++bounded;
    CHECK(f.length() == 6);
  }
  CHECK(bounded == 8);

  const PlaneGraph padded = generate_gadget({.p = 2, .q = 3, .k = 3, .n = 20});
  CHECK(padded.num_vertices() == 20);
  CHECK(padded.max_bounded_face_length() == 8);
  CHECK(padded.is_connected());

  for (GadgetSpec bad : {GadgetSpec{.p = 1}, GadgetSpec{.q = 1}, GadgetSpec{.k = 0}, GadgetSpec{.p = 3, .q = 3, .k = 2, .n = 5}}) {
    try {
      generate_gadget(bad);
      FAIL("accepted a bad spec");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidSpec);
    }
  }
}

TEST_CASE("small gadgets meet the lower bound") {
  // p=2 gadgets with q > k: bound (l/2 - 1)(p - 1) = k
  for (int k = 1; k <= 3; ++k) {
    const PlaneGraph g = generate_gadget({.p = 2, .q = k + 1, .k = k});
    CHECK(oracle::emwidth(g) >= k);
    CHECK(exact_treewidth(g.underlying()).width == 2);
  }
  const PlaneGraph g332 = generate_gadget({.p = 3, .q = 3, .k = 2});
  CHECK(exact_treewidth(g332.underlying()).width == 3);
  CHECK(oracle::emwidth(g332) >= 4);
}

TEST_CASE("dual outerplanarity labeling") {
  const auto op = dual_outerplanarity_labeling(cycle(5));
  CHECK(op.k == 1);
  CHECK(std::all_of(op.label.begin(), op.label.end(), [](int l) { return l == 1; }));

  const auto fan6 = dual_outerplanarity_labeling(fan(6));
  CHECK(std::all_of(fan6.label.begin(), fan6.label.end(), [](int l) { return l == 1; }));

  for (int side : {3, 5}) {
    const auto d = dual_outerplanarity_labeling(grid(side, side));
    const int k = side == 3 ? 2 : 3;
    CHECK(d.k == k);
    CHECK(*std::max_element(d.label.begin(), d.label.end()) <= k);
    CHECK(d.certified());
  }
  for (int seed = 0; seed < 80; ++seed) {
    const PlaneGraph g = corpus::random_plane_graph({.n = 3 + seed % 15}, 5100 + seed);
    CHECK(dual_outerplanarity_labeling(g).certified());
  }
}
