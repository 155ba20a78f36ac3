#ifndef QDECO_GRAPH_HPP
#define QDECO_GRAPH_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qdeco {

// Set of original vertex labels, kept sorted and duplicate-free.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> labels);

    void insert(int label);
    void merge(const VertexSet& other);
    bool contains(int label) const;
    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }

    const std::vector<int>& labels() const { return labels_; }
    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> labels_;
};

/// Immutable simple undirected graph. Vertices carry the labels of the
/// original input graph so that solutions on induced subgraphs map straight
/// back to the instance they came from. Internal indices 0..n-1 are ordered
/// by ascending label; every derived graph (complement, induced subgraph,
/// k-core) preserves that ordering.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1, labels are the identity. Duplicate edges collapse;
    // self-loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    // Seeded G(n,p): pairs (i,j), i<j, are visited in lexicographic order and
    // one uniform draw is consumed per pair, so a fixed (n,p,seed) triple
    // yields an identical edge set everywhere.
    static Graph erdos_renyi(int n, double p, std::uint64_t seed);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    int label(int v) const { return labels_[v]; }
    const std::vector<int>& labels() const { return labels_; }
    // Internal index for an original label, or -1 if absent from this graph.
    int index_of_label(int label) const;

    // All edges as (label, label) pairs with first < second, sorted.
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;

    // Subgraph induced by original labels; unknown labels are rejected.
    Graph induced_subgraph(const VertexSet& keep) const;
    // Subgraph induced by internal indices (need not be sorted).
    Graph induced_by_indices(std::span<const int> keep) const;
    // Same vertex set and labels, keeping only the given edges (by index).
    Graph edge_subgraph(std::span<const std::pair<int, int>> keep_edges) const;

    // Maximal induced subgraph with minimum degree >= k (possibly empty).
    Graph k_core(int k) const;

    // Peel a minimum-degree vertex until empty. Returns the degeneracy d
    // (max over the peel of the degree at removal time) and the peeling
    // order as labels. Any clique satisfies omega <= d + 1.
    std::pair<int, std::vector<int>> degeneracy() const;

    // Colors vertices in non-increasing degree order (ties: smallest label),
    // each taking the smallest color unused by its colored neighbors.
    // The count is a proper-coloring size, hence an upper bound on omega.
    int greedy_coloring() const;

    // Scans edges in (min-label, max-label) lexicographic order and greedily
    // takes vertex-disjoint ones. |matching| <= MVC <= 2 |matching|.
    std::vector<std::pair<int, int>> maximal_matching() const;

    // Grows a clique by repeatedly taking the candidate with the most
    // neighbors inside the shrinking common neighborhood (ties: smallest
    // label). Returns labels; a fast lower-bound witness for omega.
    VertexSet greedy_clique() const;

private:
    static Graph build(std::vector<std::vector<int>> adj, std::vector<int> labels);

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;    // sorted neighbor indices
    std::vector<int> labels_;              // ascending
    std::unordered_map<int, int> label_index_;
};

bool is_clique(const Graph& g, const VertexSet& labels);
bool is_vertex_cover(const Graph& g, const VertexSet& labels);

} // namespace qdeco

#endif // QDECO_GRAPH_HPP
