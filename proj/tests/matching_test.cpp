#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "emw/error.hpp"
#include "emw/matching.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace emw;
using namespace emw::fixtures;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParseError;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Triangle 0,1,2 with a 3-family on edge 0-1; paths through the lenses when
/// `obstruct`.
PlaneGraph triangle_with_family(int r, bool obstruct) {
  corpus::Rotation rot{{2, 1}, {0, 2}, {1, 0}};
  corpus::inject_family(rot, 0, 1, r, obstruct);
  return build_embedding(rot);
}

/// Random connected plane graph with minimum degree 2 and no 3-family.
std::optional<PlaneGraph> family_free(int n, std::uint64_t seed, int subdivisions) {
  const PlaneGraph g = corpus::random_plane_graph(
      {.n = n, .max_delete_fraction = 1.0, .keep_min_degree_two = true, .subdivisions = subdivisions}, seed);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  if (!find_r_families(g, 3).empty()) return std::nullopt;
  return g;
}

}  // namespace

TEST_CASE("fixtures are planar with the expected sizes") {
  CHECK(icosahedron().num_faces() == 20);
  CHECK(cube().num_faces() == 6);
}

TEST_CASE("families") {
  const auto k23 = find_r_families(k2r(3), 2);
  REQUIRE(k23.size() == 1);
  CHECK(k23[0].r() == 3);
  CHECK(k23[0].nicely_embedded);
  CHECK(k23[0].a == 0);
  CHECK(k23[0].b == 1);
  CHECK(std::count(k23[0].lens.begin(), k23[0].lens.end(), LensKind::kJoined) == 2);

  CHECK(find_r_families(cycle(4), 3).empty());
  CHECK(find_r_families(cycle(4), 2).size() == 2);

  const auto k24 = find_r_families(k2r(4, true), 3);
  REQUIRE(k24.size() == 1);
  CHECK(k24[0].r() == 4);
  CHECK(k24[0].nicely_embedded);

  const PlaneGraph bad = triangle_with_family(3, true);
  const auto fams = find_r_families(bad, 3);
  REQUIRE(fams.size() == 1);
  CHECK_FALSE(fams[0].nicely_embedded);
  CHECK(fams[0].obstructions.size() >= 1);
  CHECK_FALSE(is_nicely_embedded(bad, fams[0]).nicely_embedded);
  CHECK(code_of([&] { is_nicely_embedded(k2r(3), fams[0]); }) == ErrorCode::kStaleFamily);
}

TEST_CASE("consecutive members of a nicely embedded family share a face") {
  const PlaneGraph g = k2r(5);
  const auto fam = find_r_families(g, 3).at(0);
  for (int i = 0; i + 1 < fam.r(); ++i) {
    bool shared = false;
    for (const Face& f : g.faces()) {
      const auto& vs = f.boundary_vertices;
      shared = shared || (std::binary_search(vs.begin(), vs.end(), fam.members[i]) &&
                          std::binary_search(vs.begin(), vs.end(), fam.members[i + 1]));
    }
    CHECK(shared);
  }
}

TEST_CASE("maximum matching") {
  CHECK(maximum_matching(k2r(5).underlying()).size() == 2);
  CHECK(maximum_matching(cycle(5).underlying()).size() == 2);
  CHECK(maximum_matching(petersen()).size() == 5);
  CHECK(oracle::max_matching_size(petersen()) == 5);
  for (int seed = 0; seed < 150; ++seed) {
    const PlaneGraph g = corpus::random_plane_graph({.n = 2 + seed % 11}, 60 + seed);
    const AbstractGraph h = g.underlying();
    const Matching m = maximum_matching(h);
    CHECK(is_matching(h, m));
    CHECK(m.size() == oracle::max_matching_size(h));
    const Matching greedy = greedy_maximal_matching(g);
    CHECK(is_matching(h, greedy));
    CHECK(2 * greedy.size() >= m.size());
  }
  // dense non-planar graphs exercise blossoms
  corpus::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 12;
    AbstractGraph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(3) == 0) h.add_edge(u, v);
    CHECK(maximum_matching(h).size() == oracle::max_matching_size(h));
  }
}

TEST_CASE("greedy maximal matching") {
  CHECK(greedy_maximal_matching(cycle(4)).size() == 2);
  AbstractGraph star(6);
  for (int i = 1; i < 6; ++i) star.add_edge(0, i);
  CHECK(greedy_maximal_matching(star).size() == 1);
}

TEST_CASE("orientations") {
  CHECK(orient_one_sink(cycle(5).underlying()).sinks.empty());
  CHECK(orient_one_sink(path(3).underlying()).sinks.size() == 1);
  AbstractGraph two(6);
  two.add_edge(0, 1);
  two.add_edge(1, 2);
  two.add_edge(2, 0);
  two.add_edge(3, 4);
  two.add_edge(4, 5);
  two.add_edge(5, 3);
  two.add_edge(2, 3);
  CHECK(orient_one_sink(two).sinks.empty());
  // parallel pair is 2-edge-connected
  AbstractGraph lens(2);
  lens.add_edge(0, 1);
  lens.add_edge(0, 1);
  CHECK(orient_one_sink(lens).sinks.empty());
  CHECK(code_of([] { orient_one_sink(AbstractGraph(2)); }) == ErrorCode::kDisconnectedInput);
  for (int seed = 0; seed < 100; ++seed) {
    const PlaneGraph g = corpus::random_plane_graph({.n = 2 + seed % 20}, 400 + seed);
    const auto o = orient_one_sink(g.underlying());
    CHECK(o.sinks.size() <= 1);
    CHECK(o.forward.size() == static_cast<std::size_t>(g.num_edges()));
  }
}

TEST_CASE("family-free matching examples") {
  const auto c9 = matching_no_r_family(cycle(9), 3);
  CHECK(c9.trace.case_tag == "2a");
  CHECK(c9.matching.size() == 4);
  CHECK_FALSE(c9.trace.fallback);

  const PlaneGraph ico = icosahedron();
  const auto i = matching_no_r_family(ico, 3);
  CHECK(i.trace.case_tag == "1");
  CHECK(i.matching.size() == 6);
  CHECK(i.trace.deg3_bound_held);

  CHECK(matching_no_r_family(cycle(4), 3).matching.size() == 2);

  // every edge of the icosahedron subdivided: all new vertices are social
  corpus::Rotation rot;
  for (VertexId v = 0; v < ico.num_vertices(); ++v) {
    rot.emplace_back();
    for (DartId d : ico.rotation(v)) rot.back().push_back(ico.head(d));
  }
  for (EdgeId e = 0; e < ico.num_edges(); ++e) {
    auto [u, v] = ico.endpoints(e);
    corpus::subdivide(rot, u, v);
  }
  const PlaneGraph sub = build_embedding(rot);
  const auto s = matching_no_r_family(sub, 3);
  CHECK(s.trace.case_tag == "2b");
  CHECK(s.trace.t2 == 30);
  CHECK(s.trace.fbar_edge_bound_held);
  CHECK(s.trace.fbar_vertex_bound_held);
  CHECK_FALSE(s.trace.fallback);
  CHECK(is_matching(sub.underlying(), s.matching));
  CHECK(s.matching.size() >= ceil_div(sub.num_vertices(), 33));
}

TEST_CASE("family-free matching preconditions") {
  CHECK(code_of([] { matching_no_r_family(path(4), 3); }) == ErrorCode::kPreconditionViolated);
  CHECK(code_of([] { matching_no_r_family(k2r(3), 3); }) == ErrorCode::kPreconditionViolated);
  CHECK(code_of([] { matching_no_r_family(build_embedding({{0, 0}}), 3); }) == ErrorCode::kSelfLoopInput);
}

TEST_CASE("family-free matching bound on random instances") {
  int tested = 0;
  for (int seed = 0; tested < 80 && seed < 2000; ++seed) {
    const auto g = family_free(10 + seed % 120, 8000 + seed, seed % 4 == 0 ? seed % 60 : 0);
    if (!g) continue;
    ++tested;
    const auto res = matching_no_r_family(*g, 3);
    CHECK(is_matching(g->underlying(), res.matching));
    CHECK(res.matching.size() >= ceil_div(g->num_vertices(), 33));
    if (res.trace.deg3_bound_checked) CHECK(res.trace.deg3_bound_held);
    CHECK(res.trace.fbar_edge_bound_held);
    CHECK(res.trace.fbar_vertex_bound_held);
    if (g->num_vertices() >= 33) CHECK_FALSE(res.trace.fallback);
  }
  CHECK(tested == 80);
}

TEST_CASE("matching with badly embedded families") {
  const auto c12 = matching_no_nice_family(cycle(12));
  CHECK(c12.trace.case_tag == "2");
  CHECK(c12.matching.size() == 6);

  const PlaneGraph obstructed = triangle_with_family(3, true);
  const auto o = matching_no_nice_family(obstructed);
  CHECK(o.trace.case_tag == "1");
  CHECK(o.trace.harvested >= 1);
  CHECK(is_matching(obstructed.underlying(), o.matching));
  CHECK(o.matching.size() >= ceil_div(obstructed.num_vertices(), 37));

  const auto c = matching_no_nice_family(cube());
  CHECK(c.trace.case_tag == "2");
  CHECK(c.matching.size() == 4);

  CHECK(code_of([] { matching_no_nice_family(k2r(3)); }) == ErrorCode::kPreconditionViolated);
}
