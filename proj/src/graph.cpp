#include "qdeco/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qdeco/rng.hpp"

namespace qdeco {

VertexSet::VertexSet(std::vector<int> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

void VertexSet::insert(int label) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) labels_.insert(it, label);
}

void VertexSet::merge(const VertexSet& other) {
    std::vector<int> merged;
    merged.reserve(labels_.size() + other.labels_.size());
    std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(),
                   other.labels_.end(), std::back_inserter(merged));
    labels_ = std::move(merged);
}

bool VertexSet::contains(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

Graph Graph::build(std::vector<std::vector<int>> adj, std::vector<int> labels) {
    Graph g;
    g.n_ = static_cast<int>(labels.size());
    g.adj_ = std::move(adj);
    g.labels_ = std::move(labels);
    int twice_m = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        twice_m += static_cast<int>(nbrs.size());
    }
    g.m_ = twice_m / 2;
    g.label_index_.reserve(g.labels_.size());
    for (int v = 0; v < g.n_; ++v) g.label_index_.emplace(g.labels_[v], v);
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not allowed");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    return build(std::move(adj), std::move(labels));
}

Graph Graph::erdos_renyi(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);
    return from_edges(n, edges);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::index_of_label(int label) const {
    auto it = label_index_.find(label);
    return it == label_index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(std::min(labels_[u], labels_[v]),
                                        std::max(labels_[u], labels_[v]));
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::complement() const {
    std::vector<std::vector<int>> adj(n_);
    for (int u = 0; u < n_; ++u) {
        const auto& nbrs = adj_[u];
        std::size_t k = 0;
        for (int v = 0; v < n_; ++v) {
            while (k < nbrs.size() && nbrs[k] < v) ++k;
            if (v == u || (k < nbrs.size() && nbrs[k] == v)) continue;
            adj[u].push_back(v);
        }
    }
    return build(std::move(adj), labels_);
}

Graph Graph::induced_by_indices(std::span<const int> keep) const {
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<int> new_index(n_, -1);
    std::vector<int> labels(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        new_index[sorted[i]] = static_cast<int>(i);
        labels[i] = labels_[sorted[i]];
    }
    std::vector<std::vector<int>> adj(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (int w : adj_[sorted[i]])
            if (new_index[w] >= 0) adj[i].push_back(new_index[w]);
    return build(std::move(adj), std::move(labels));
}

Graph Graph::edge_subgraph(std::span<const std::pair<int, int>> keep_edges) const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [u, v] : keep_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return build(std::move(adj), labels_);
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
    std::vector<int> indices;
    indices.reserve(keep.size());
    for (int label : keep) {
        int v = index_of_label(label);
        if (v < 0)
            throw std::invalid_argument("label " + std::to_string(label) +
                                        " is not a vertex of this graph");
        indices.push_back(v);
    }
    return induced_by_indices(indices);
}

Graph Graph::k_core(int k) const {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<int> deg(n_);
    std::vector<bool> removed(n_, false);
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v) {
        deg[v] = degree(v);
        if (deg[v] < k) {
            removed[v] = true;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (removed[w]) continue;
            if (--deg[w] < k) {
                removed[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!removed[v]) keep.push_back(v);
    return induced_by_indices(keep);
}

std::pair<int, std::vector<int>> Graph::degeneracy() const {
    std::vector<int> deg(n_);
    std::vector<bool> removed(n_, false);
    for (int v = 0; v < n_; ++v) deg[v] = degree(v);

    int d = 0;
    std::vector<int> order;
    order.reserve(n_);
    for (int step = 0; step < n_; ++step) {
        int best = -1;
        for (int v = 0; v < n_; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        d = std::max(d, deg[best]);
        removed[best] = true;
        order.push_back(labels_[best]);
        for (int w : adj_[best])
            if (!removed[w]) --deg[w];
    }
    return {d, order};
}

int Graph::greedy_coloring() const {
    if (n_ == 0) return 0;
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [this](int a, int b) { return degree(a) > degree(b); });

    std::vector<int> color(n_, -1);
    int used = 0;
    std::vector<char> taken;
    for (int v : order) {
        taken.assign(used + 1, 0);
        for (int w : adj_[v])
            if (color[w] >= 0) taken[color[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

std::vector<std::pair<int, int>> Graph::maximal_matching() const {
    std::vector<bool> matched(n_, false);
    std::vector<std::pair<int, int>> matching;
    for (int u = 0; u < n_; ++u) {
        if (matched[u]) continue;
        for (int v : adj_[u]) {
            if (v <= u || matched[v]) continue;
            matched[u] = matched[v] = true;
            matching.emplace_back(labels_[u], labels_[v]);
            break;
        }
    }
    return matching;
}

VertexSet Graph::greedy_clique() const {
    VertexSet clique;
    std::vector<char> candidate(n_, 1);
    int remaining = n_;
    while (remaining > 0) {
        int best = -1, best_count = -1;
        for (int v = 0; v < n_; ++v) {
            if (!candidate[v]) continue;
            int count = 0;
            for (int w : adj_[v]) count += candidate[w];
            if (count > best_count) {
                best = v;
                best_count = count;
            }
        }
        clique.insert(labels_[best]);
        // shrink candidates to the common neighborhood of the clique
        std::vector<char> next(n_, 0);
        remaining = 0;
        for (int w : adj_[best])
            if (candidate[w]) {
                next[w] = 1;
                ++remaining;
            }
        candidate = std::move(next);
    }
    return clique;
}

bool is_clique(const Graph& g, const VertexSet& labels) {
    const auto& ls = labels.labels();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        int u = g.index_of_label(ls[i]);
        if (u < 0) return false;
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            int v = g.index_of_label(ls[j]);
            if (v < 0 || !g.has_edge(u, v)) return false;
        }
    }
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& labels) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (u > v) continue;
            if (!labels.contains(g.label(u)) && !labels.contains(g.label(v))) return false;
        }
    return true;
}

} // namespace qdeco
