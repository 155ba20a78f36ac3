#ifndef QDECO_GRAPH_IO_HPP
#define QDECO_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "qdeco/graph.hpp"

namespace qdeco {

enum class GraphFormat { Dimacs, EdgeList };

// DIMACS clique format: "c" comments, one "p edge N M" header, then
// "e u v" lines with 1-based endpoints (stored as labels u-1, v-1).
Graph read_dimacs(std::istream& in);

// One "u v" pair per 0-based line, "#" comments, and an optional "n N"
// header that pins the vertex count (otherwise n = max label + 1).
Graph read_edge_list(std::istream& in);

Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);

// Edge-list writer, always with the "n N" header so isolated vertices survive.
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace qdeco

#endif // QDECO_GRAPH_IO_HPP
