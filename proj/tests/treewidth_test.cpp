#include "corpus.hpp"
#include "doctest.h"
#include "emw/error.hpp"
#include "emw/treewidth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace emw;
using namespace emw::fixtures;

TEST_CASE("small exact values") {
  CHECK(exact_treewidth(AbstractGraph(1)).width == 0);
  CHECK(exact_treewidth(AbstractGraph(3)).width == 0);
  CHECK(exact_treewidth(path(6).underlying()).width == 1);
  CHECK(exact_treewidth(cycle(4).underlying()).width == 2);
  CHECK(exact_treewidth(k4().underlying()).width == 3);
  CHECK(exact_treewidth(wheel(7).underlying()).width == 3);
  CHECK(exact_treewidth(AbstractGraph(0)).width == -1);
}

TEST_CASE("grid treewidth is the smaller side") {
  for (int p = 2; p <= 4; ++p) {
    for (int q = 2; q <= 4; ++q) {
      const auto r = exact_treewidth(grid(p, q).underlying());
      CHECK(r.width == std::min(p, q));
      CHECK(validate_tree_decomposition(grid(p, q).underlying(), r.decomposition).ok());
    }
  }
}

TEST_CASE("exact search agrees with the subset oracle") {
  for (int seed = 0; seed < 120; ++seed) {
    const PlaneGraph g = corpus::random_plane_graph({.n = 2 + seed % 11}, 7000 + seed);
    const AbstractGraph h = g.underlying();
    const auto r = exact_treewidth(h);
    CHECK(r.width == oracle::treewidth(h));
    const auto report = validate_tree_decomposition(h, r.decomposition);
    CHECK(report.ok());
    CHECK(report.width == r.width);
    CHECK(treewidth_lower_bound(h) <= r.width);
    CHECK(min_fill_decomposition(h).width >= r.width);
  }
}

TEST_CASE("treewidth_at_most") {
  const AbstractGraph g = grid(3, 4).underlying();
  CHECK_FALSE(treewidth_at_most(g, 2).has_value());
  const auto yes = treewidth_at_most(g, 3);
  REQUIRE(yes.has_value());
  CHECK(yes->width <= 3);
  CHECK(validate_tree_decomposition(g, yes->decomposition).ok());
}

TEST_CASE("subdividing an edge keeps the treewidth") {
  for (int seed = 0; seed < 30; ++seed) {
    corpus::Rng rng(300 + seed);
    auto rot = corpus::random_rotation({.n = 4 + seed % 8}, rng);
    const int before = exact_treewidth(build_embedding(rot).underlying()).width;
    const VertexId u = rng.below(static_cast<int>(rot.size()));
    corpus::subdivide(rot, u, rot[u].front());
    CHECK(exact_treewidth(build_embedding(rot).underlying()).width == std::max(before, 1));
  }
}

TEST_CASE("oversized instances are refused") {
  try {
    exact_treewidth(grid(5, 5).underlying(), SearchLimits{.vertex_cap = 20});
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInstanceTooLarge);
  }
}
