#ifndef QDECO_SUBPROBLEM_HPP
#define QDECO_SUBPROBLEM_HPP

#include <cstdint>

#include "qdeco/graph.hpp"

namespace qdeco {

enum class Problem { MaxClique, MinVertexCover };

inline bool maximizing(Problem p) { return p == Problem::MaxClique; }

// One node of the decomposition tree: the residual graph plus the vertices
// already committed to the solution along this branch and their accumulated
// objective contribution. Committed vertices are never part of the residual
// graph. For MC every residual vertex is adjacent (in the original graph) to
// all committed vertices; for MVC the committed set covers every original
// edge with no endpoint in the residual graph.
struct Subproblem {
    Graph graph;
    VertexSet committed;
    int delta = 0;
    int depth = 0;
    // Identifies the branch path from the root; seeds for vertex selection
    // and annealing reads derive from it, so they are independent of worker
    // scheduling.
    std::uint64_t path = 1;
};

// Feasible solution in original labels. value is the clique or cover size,
// always equal to |vertices|.
struct Solution {
    VertexSet vertices;
    int value = 0;

    bool operator==(const Solution&) const = default;
};

inline bool better(Problem p, int candidate, int incumbent) {
    return maximizing(p) ? candidate > incumbent : candidate < incumbent;
}

} // namespace qdeco

#endif // QDECO_SUBPROBLEM_HPP
