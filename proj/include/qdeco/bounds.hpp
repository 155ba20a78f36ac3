#ifndef QDECO_BOUNDS_HPP
#define QDECO_BOUNDS_HPP

#include <string>
#include <utility>

#include "qdeco/graph.hpp"

namespace qdeco {

// Which pruning-bound family the engine evaluates on subproblems. For MC the
// family yields an upper bound on omega; for MVC the same family, applied to
// the complement, yields a lower bound on the cover size.
enum class BoundFamily { None, Chromatic, Deterministic, Both };

struct BoundReport {
    int clique_upper = 0;
    int clique_lower = 0;
    int cover_lower = 0;
    int cover_upper = 0;
    std::string source; // names of the components that attained each bound
};

// Greedy proper coloring size; >= omega(g).
int clique_upper_chromatic(const Graph& g);

// Minimum of three cheap bounds: n - |matching(complement)|, the spectral
// inertia bound on the independence number of the complement, and
// degeneracy + 1. Always >= omega(g).
int clique_upper_deterministic(const Graph& g);

// |greedy_clique(g)|; <= omega(g).
int clique_lower_heuristic(const Graph& g);

// (lower, upper) bracket of MVC(g) via matching and the complement of the
// clique bounds: lower = max(|matching|, n - clique_upper(complement)),
// upper = n - clique_lower_heuristic(complement).
std::pair<int, int> cover_bounds(const Graph& g);

// Family dispatchers used by the pruning step. BoundFamily::None returns the
// trivial bound (n for cliques, 0 for covers).
int clique_upper(const Graph& g, BoundFamily family);
int cover_lower(const Graph& g, BoundFamily family);

BoundReport bound_report(const Graph& g);

// Cvetkovic inertia bound alpha(h) <= min(n - n_pos, n - n_neg) over the
// adjacency spectrum of h; returns n when h is larger than the eigensolve
// size gate.
int inertia_independence_bound(const Graph& h);

} // namespace qdeco

#endif // QDECO_BOUNDS_HPP
