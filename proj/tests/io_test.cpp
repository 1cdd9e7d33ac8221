#include <set>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "emw/emwidth.hpp"
#include "emw/error.hpp"
#include "emw/io.hpp"
#include "emw/matching.hpp"
#include "fixtures.hpp"

using namespace emw;
using namespace emw::fixtures;

namespace {

int parse_line_of(const std::string& text) {
  try {
    parse_plane_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

void check_round_trip(const PlaneGraph& g) {
  const std::string text = print_plane_graph(g);
  const PlaneGraph back = parse_plane_graph(text);
  CHECK(canonical_code(back) == canonical_code(g));
  CHECK(print_plane_graph(back) == text);
  CHECK(back.face(back.outer_face()).length() == g.face(g.outer_face()).length());
}

}  // namespace

TEST_CASE("pg text for a triangle") {
  const PlaneGraph g = triangle();
  CHECK(print_plane_graph(g) == "0: 2 1\n1: 0 2\n2: 1 0\nouter: 0 1 2\n");
}

TEST_CASE("pg parse accepts comments, blank lines and any line order") {
  const PlaneGraph g = parse_plane_graph("# a 4-cycle\n\n2: 1 3\n0: 3 1   # trailing\n1: 0 2\n3: 2 0\n");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  CHECK(g.num_faces() == 2);
}

TEST_CASE("pg round trip over fixtures") {
  for (const PlaneGraph& g : {triangle(), cycle(6), path(5), grid(3, 4), wheel(7), k4(), k2r(4, true), fan(6),
                              icosahedron(), cube()}) {
    check_round_trip(g);
  }
}

TEST_CASE("pg round trip over the random corpus") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    corpus::RandomOptions opt;
    opt.n = 3 + static_cast<int>(seed % 30);
    opt.subdivisions = static_cast<int>(seed % 3);
    check_round_trip(corpus::random_plane_graph(opt, seed));
  }
}

TEST_CASE("pg round trip keeps a non-default outer face") {
  for (int corner = 0; corner < 3; ++corner) {
    const PlaneGraph g = build_embedding({{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {1, 0, 2}}, std::make_pair(3, corner));
    const PlaneGraph back = parse_plane_graph(print_plane_graph(g));
    CHECK(canonical_code(back) == canonical_code(g));
  }
}

TEST_CASE("pg round trip with parallel edges from contraction") {
  int multigraphs = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    corpus::RandomOptions opt;
    opt.n = 6 + static_cast<int>(seed % 20);
    const PlaneGraph g = corpus::random_plane_graph(opt, seed);
    const auto [h, map] = contract_matching(g, greedy_maximal_matching(g));
    bool parallel = false;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      auto [u, v] = h.endpoints(e);
      if (!seen.insert(std::minmax(u, v)).second) parallel = true;
    }
    multigraphs += parallel;
    check_round_trip(h);
  }
  CHECK(multigraphs > 10);
}

TEST_CASE("pg triple parallel edges pair by occurrence rank") {
  // theta graph: three copies between 0 and 1
  const PlaneGraph g = build_embedding({{1, 1, 1}, {0, 0, 0}});
  CHECK(g.num_faces() == 3);
  check_round_trip(g);
}

TEST_CASE("pg parse errors carry line numbers") {
  CHECK(parse_line_of("0: 1\n1 0\n") == 2);
  CHECK(parse_line_of("0: 1\n1: 0\n0: 1\n") == 3);
  CHECK(parse_line_of("# c\n0: 1 x\n1: 0\n") == 2);
  CHECK(parse_line_of("0: 1 2\n1: 0 2\n2: 1\n") == 1);
  CHECK(parse_line_of("0: 1\n1: 0 5\n") == 2);
  CHECK(parse_line_of("0: 2\n2: 0\n") == 2);
  CHECK(parse_line_of("0: 1\n1: 0\nouter: 0 1\n2:\n") == 4);
  CHECK(parse_line_of("0: 1 2 3\n1: 2 0 3\n2: 0 1 3\n3: 0 2 1\nouter: 0 3 2 1\n") == 5);
}

TEST_CASE("td print and parse") {
  TreeDecomposition t;
  t.add_node({0, 1, 2});
  t.add_node({2, 3});
  t.add_tree_edge(0, 1);
  const std::string text = print_tree_decomposition(t, 4);
  CHECK(text == "s td 2 3 4\nb 1 1 2 3\nb 2 3 4\n1 2\n");
  int n = 0;
  const TreeDecomposition back = parse_tree_decomposition(text, &n);
  CHECK(n == 4);
  CHECK(back.bags == t.bags);
  CHECK(back.tree_edges == t.tree_edges);
  CHECK(print_tree_decomposition(back, n) == text);
}

TEST_CASE("td round trip of computed decompositions is bit exact") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    corpus::RandomOptions opt;
    opt.n = 5 + static_cast<int>(seed % 25);
    const PlaneGraph g = corpus::random_plane_graph(opt, seed);
    const auto ans = decide_emwidth(g, g.num_vertices());
    REQUIRE(ans.decomposition);
    const std::string text = print_tree_decomposition(*ans.decomposition, g.num_vertices());
    CHECK(print_tree_decomposition(parse_tree_decomposition(text), g.num_vertices()) == text);
  }
}

TEST_CASE("td comments, empty decomposition and errors") {
  CHECK(parse_tree_decomposition("c nothing\ns td 0 0 0\n").num_nodes() == 0);
  CHECK(print_tree_decomposition(TreeDecomposition{}, 0) == "s td 0 0 0\n");
  auto line_of = [](const std::string& text) {
    try {
      parse_tree_decomposition(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("b 1 1\n") == 1);
  CHECK(line_of("s td 1 1 2\nb 1 3\n") == 2);
  CHECK(line_of("s td 2 1 2\nb 1 1\nb 2 2\n1 3\n") == 4);
  CHECK(line_of("s td 1 2 2\nb 1 1 2 \nb 1 1\n") == 3);
  CHECK(line_of("s td 2 2 2\nb 1 1 2\n") > 0);
  CHECK(line_of("s td 1 3 2\nb 1 1 2\n") > 0);
}
