#include "qdeco/reductions.hpp"

#include <algorithm>
#include <vector>

#include "qdeco/qubo.hpp"

namespace qdeco {

Graph mc_kcore_reduce(const Graph& g, int incumbent_size) {
    return g.k_core(std::max(incumbent_size, 0));
}

Graph mc_edge_kcore_reduce(const Graph& g, int incumbent_size) {
    const int need = incumbent_size - 1; // common neighbors required to keep an edge
    if (need <= 0) return g.k_core(std::max(incumbent_size, 0));
    Graph cur = g;
    for (;;) {
        std::vector<std::pair<int, int>> kept;
        kept.reserve(cur.edge_count());
        for (int u = 0; u < cur.vertex_count(); ++u)
            for (int v : cur.neighbors(u)) {
                if (v <= u) continue;
                const auto& nu = cur.neighbors(u);
                const auto& nv = cur.neighbors(v);
                int common = 0;
                std::size_t i = 0, j = 0;
                while (i < nu.size() && j < nv.size()) {
                    if (nu[i] < nv[j]) ++i;
                    else if (nu[i] > nv[j]) ++j;
                    else { ++common; ++i; ++j; }
                }
                if (common >= need) kept.emplace_back(u, v);
            }
        const bool dropped = static_cast<int>(kept.size()) != cur.edge_count();
        if (dropped) cur = cur.edge_subgraph(kept);
        Graph cored = cur.k_core(incumbent_size);
        const bool peeled = cored.vertex_count() != cur.vertex_count();
        cur = std::move(cored);
        if (!dropped && !peeled) return cur;
    }
}

ReductionOutcome nbvr_reduce(const Subproblem& sub) {
    ReductionOutcome out;
    Graph cur = sub.graph;
    const int n0 = cur.vertex_count();
    const int m0 = cur.edge_count();

    bool changed = true;
    while (changed) {
        changed = false;
        const int n = cur.vertex_count();

        // degree-0 vertices go first
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (cur.degree(v) > 0) keep.push_back(v);
        if (static_cast<int>(keep.size()) != n) {
            cur = cur.induced_by_indices(keep);
            changed = true;
            continue;
        }

        // degree-1 vertex: its neighbor joins the cover
        for (int v = 0; v < n; ++v) {
            if (cur.degree(v) != 1) continue;
            const int u = cur.neighbors(v)[0];
            out.committed.insert(cur.label(u));
            out.delta += 1;
            std::vector<int> rest;
            for (int w = 0; w < n; ++w)
                if (w != v && w != u) rest.push_back(w);
            cur = cur.induced_by_indices(rest);
            changed = true;
            break;
        }
        if (changed) continue;

        // triangle components: all three vertices of degree exactly 2
        for (int v = 0; v < n; ++v) {
            if (cur.degree(v) != 2) continue;
            const int a = cur.neighbors(v)[0];
            const int b = cur.neighbors(v)[1];
            if (cur.degree(a) != 2 || cur.degree(b) != 2 || !cur.has_edge(a, b)) continue;
            std::vector<int> labels = {cur.label(v), cur.label(a), cur.label(b)};
            std::sort(labels.begin(), labels.end());
            out.committed.insert(labels[0]);
            out.committed.insert(labels[1]);
            out.delta += 2;
            std::vector<int> rest;
            for (int w = 0; w < n; ++w)
                if (w != v && w != a && w != b) rest.push_back(w);
            cur = cur.induced_by_indices(rest);
            changed = true;
            break;
        }
    }

    out.removed_vertices = n0 - cur.vertex_count();
    out.removed_edges = m0 - cur.edge_count();
    out.graph = std::move(cur);
    return out;
}

ReductionOutcome persistency_reduce(const Subproblem& sub, Problem problem) {
    const Graph& g = sub.graph;
    const Qubo q = problem == Problem::MaxClique ? build_mc_qubo(g) : build_mvc_qubo(g);
    const Assignment fixed = persistencies(q);

    ReductionOutcome out;
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto it = fixed.values.find(v);
        if (it == fixed.values.end()) {
            keep.push_back(v);
        } else if (it->second == 1) {
            out.committed.insert(g.label(v));
            out.delta += 1;
        }
    }
    out.graph = g.induced_by_indices(keep);
    out.removed_vertices = g.vertex_count() - out.graph.vertex_count();
    out.removed_edges = g.edge_count() - out.graph.edge_count();
    return out;
}

} // namespace qdeco
