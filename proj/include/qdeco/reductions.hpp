#ifndef QDECO_REDUCTIONS_HPP
#define QDECO_REDUCTIONS_HPP

#include "qdeco/graph.hpp"
#include "qdeco/subproblem.hpp"

namespace qdeco {

enum class Reduction { KCore, EdgeKCore, Persistency, Nbvr };

// Result of a size-shrinking pass. committed / delta are increments to merge
// into the subproblem; delta always equals the objective contribution of the
// removed structure (which can exceed |committed|-changes only through rules
// that commit a subset, e.g. the triangle rule commits two vertices for a
// contribution of two).
struct ReductionOutcome {
    Graph graph;
    VertexSet committed;
    int delta = 0;
    int removed_vertices = 0;
    int removed_edges = 0;
};

// Vertex k-core with k = incumbent clique size: every clique strictly larger
// than the incumbent survives.
Graph mc_kcore_reduce(const Graph& g, int incumbent_size);

// Removes every edge whose endpoints share fewer than incumbent_size - 1
// common neighbors (no such edge can sit in a clique beating the incumbent),
// re-runs the vertex k-core, and iterates to a fixed point.
Graph mc_edge_kcore_reduce(const Graph& g, int incumbent_size);

// Neighbor-based vertex removal for MVC, applied to a fixed point:
// degree-0 vertices are dropped; a degree-1 vertex sends its only neighbor
// into the cover (contribution 1); a triangle forming a whole component
// sends its two smallest labels into the cover (contribution 2).
ReductionOutcome nbvr_reduce(const Subproblem& sub);

// Builds the problem QUBO for the subproblem's graph, runs the persistency
// rules, and maps fixings back: x_v = 1 commits v (contribution 1),
// x_v = 0 deletes v, and the residual graph is induced by the unfixed
// variables. Optimal objective is preserved by weak persistency.
ReductionOutcome persistency_reduce(const Subproblem& sub, Problem problem);

} // namespace qdeco

#endif // QDECO_REDUCTIONS_HPP
