#include "qdeco/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qdeco/errors.hpp"

namespace qdeco {
namespace {

Graph from_edges_or_parse_error(int n, const std::vector<std::pair<int, int>>& edges) {
    try {
        return Graph::from_edges(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_edges = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> declared_edges) || n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": malformed problem line");
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": edge before the problem line");
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex outside [1," +
                                 std::to_string(n) + "]");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
    if (n < 0) throw ParseError("missing problem line 'p edge N M'");
    return from_edges_or_parse_error(n, edges);
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int declared_n = -1;
    int max_label = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        if (first == "n") {
            if (!(ls >> declared_n) || declared_n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": malformed 'n N' header");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": expected a vertex id, got '" +
                             first + "'");
        }
        if (!(ls >> v))
            throw ParseError("line " + std::to_string(lineno) + ": missing second endpoint");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
        edges.emplace_back(u, v);
        max_label = std::max(max_label, std::max(u, v));
    }
    int n = declared_n >= 0 ? declared_n : max_label + 1;
    if (max_label >= n)
        throw ParseError("vertex " + std::to_string(max_label) + " exceeds declared count " +
                         std::to_string(n));
    return from_edges_or_parse_error(n, edges);
}

Graph read_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_graph(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

} // namespace qdeco
