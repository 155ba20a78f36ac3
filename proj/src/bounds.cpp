#include "qdeco/bounds.hpp"

#include <algorithm>

#include "qdeco/linalg.hpp"

namespace qdeco {
namespace {

// Eigensolves above this size are not worth their cost in a bound that is
// recomputed per subproblem.
constexpr int kInertiaSizeGate = 400;

} // namespace

int inertia_independence_bound(const Graph& h) {
    const int n = h.vertex_count();
    if (n == 0) return 0;
    if (n > kInertiaSizeGate) return n;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v : h.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
    const auto eig = symmetric_eigenvalues(std::move(a), n);
    const double max_entry = h.edge_count() > 0 ? 1.0 : 0.0;
    const double tol = 1e-8 * n * max_entry;
    int n_pos = 0, n_neg = 0;
    for (double lambda : eig) {
        if (lambda > tol) ++n_pos;
        if (lambda < -tol) ++n_neg;
    }
    return std::min(n - n_pos, n - n_neg);
}

int clique_upper_chromatic(const Graph& g) {
    return g.greedy_coloring();
}

int clique_upper_deterministic(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const Graph co = g.complement();
    const int matching_bound = n - static_cast<int>(co.maximal_matching().size());
    const int inertia_bound = inertia_independence_bound(co);
    const int degeneracy_bound = g.degeneracy().first + 1;
    return std::min({matching_bound, inertia_bound, degeneracy_bound});
}

int clique_lower_heuristic(const Graph& g) {
    return g.greedy_clique().size();
}

std::pair<int, int> cover_bounds(const Graph& g) {
    const int n = g.vertex_count();
    const Graph co = g.complement();
    const int matching = static_cast<int>(g.maximal_matching().size());
    const int lower = std::max({matching, n - clique_upper_chromatic(co),
                                n - clique_upper_deterministic(co)});
    const int upper = n - clique_lower_heuristic(co);
    return {std::max(lower, 0), upper};
}

int clique_upper(const Graph& g, BoundFamily family) {
    switch (family) {
        case BoundFamily::Chromatic:
            return clique_upper_chromatic(g);
        case BoundFamily::Deterministic:
            return clique_upper_deterministic(g);
        case BoundFamily::Both:
            return std::min(clique_upper_chromatic(g), clique_upper_deterministic(g));
        case BoundFamily::None:
            break;
    }
    return g.vertex_count();
}

int cover_lower(const Graph& g, BoundFamily family) {
    if (family == BoundFamily::None) return 0;
    return std::max(0, g.vertex_count() - clique_upper(g.complement(), family));
}

BoundReport bound_report(const Graph& g) {
    BoundReport r;
    const int chromatic = clique_upper_chromatic(g);
    const int deterministic = clique_upper_deterministic(g);
    r.clique_upper = std::min(chromatic, deterministic);
    r.clique_lower = clique_lower_heuristic(g);
    std::tie(r.cover_lower, r.cover_upper) = cover_bounds(g);
    r.source = (chromatic <= deterministic ? "clique_upper=chromatic" : "clique_upper=deterministic");
    r.source += ";clique_lower=greedy;cover=matching|complement";
    return r;
}

} // namespace qdeco
