#pragma once

#include <iosfwd>
#include <string>

#include "emw/decomposition.hpp"
#include "emw/plane_graph.hpp"

namespace emw {

/// Reads the ".pg" rotation format. Vertex ids are 0-based and every id in
/// [0, max id] needs its own line. Repeated neighbour entries pair by
/// occurrence rank as in build_embedding; an `outer:` line selects the face
/// whose boundary walk visits those vertices in that cyclic order.
/// Throws ParseError (with the offending line) on malformed text and on
/// rotations that do not describe a plane embedding.
PlaneGraph parse_plane_graph(std::istream& in);
PlaneGraph parse_plane_graph(const std::string& text);

/// Writes ".pg". Each vertex's list starts at an offset chosen so that the
/// reader's pairing rule reproduces the same darts; kNotRepresentable when no
/// such offsets exist. Always emits an `outer:` line when there is an edge.
std::string print_plane_graph(const PlaneGraph& g);

/// PACE-style ".td": node ids and vertex ids are 1-based in the file.
/// `c` lines are comments. Bag order, bag contents and tree-edge order are
/// kept as written, so print(parse(x)) reproduces x up to whitespace.
TreeDecomposition parse_tree_decomposition(std::istream& in, int* num_vertices = nullptr);
TreeDecomposition parse_tree_decomposition(const std::string& text, int* num_vertices = nullptr);
std::string print_tree_decomposition(const TreeDecomposition& t, int num_vertices);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace emw
