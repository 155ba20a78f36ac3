#include "qdeco/decomposer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdeco/errors.hpp"

namespace qdeco {

bool Incumbent::offer(const Solution& candidate) {
    std::lock_guard lock(mutex_);
    if (!best_ || better(problem_, candidate.value, best_->value)) {
        best_ = candidate;
        return true;
    }
    return false;
}

std::optional<int> Incumbent::value() const {
    std::lock_guard lock(mutex_);
    return best_ ? std::optional<int>(best_->value) : std::nullopt;
}

std::optional<Solution> Incumbent::best() const {
    std::lock_guard lock(mutex_);
    return best_;
}

int select_vertex(const Graph& g, Selection strategy, Rng& rng) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("cannot select a vertex from an empty graph");
    if (strategy == Selection::Random) return rng.uniform_int(n);

    int target;
    if (strategy == Selection::MedianDegree) {
        std::vector<int> degrees(n);
        for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
        std::sort(degrees.begin(), degrees.end());
        target = degrees[(n - 1) / 2]; // lower median
    } else {
        target = g.degree(0);
        for (int v = 1; v < n; ++v) {
            const int d = g.degree(v);
            if (strategy == Selection::LowDegree ? d < target : d > target) target = d;
        }
    }
    std::vector<int> ties;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == target) ties.push_back(v);
    return ties[rng.uniform_int(static_cast<int>(ties.size()))];
}

namespace {

Subproblem make_child(const Subproblem& parent, Graph graph, std::uint64_t branch) {
    Subproblem child;
    child.graph = std::move(graph);
    child.committed = parent.committed;
    child.delta = parent.delta;
    child.depth = parent.depth + 1;
    child.path = derive_seed(parent.path, branch);
    return child;
}

void check_split_vertex(const Subproblem& sub, int v) {
    if (v < 0 || v >= sub.graph.vertex_count())
        throw std::invalid_argument("split vertex " + std::to_string(v) +
                                    " is not in the subproblem graph");
}

} // namespace

std::pair<Subproblem, Subproblem> split_mc(const Subproblem& sub, int v) {
    check_split_vertex(sub, v);
    const Graph& g = sub.graph;

    Subproblem plus = make_child(sub, g.induced_by_indices(g.neighbors(v)), 1);
    plus.committed.insert(g.label(v));
    plus.delta += 1;

    std::vector<int> rest;
    rest.reserve(g.vertex_count() - 1);
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v) rest.push_back(w);
    Subproblem minus = make_child(sub, g.induced_by_indices(rest), 2);

    return {std::move(plus), std::move(minus)};
}

std::pair<Subproblem, Subproblem> split_mvc(const Subproblem& sub, int v) {
    check_split_vertex(sub, v);
    const Graph& g = sub.graph;

    std::vector<int> without_v;
    without_v.reserve(g.vertex_count() - 1);
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v) without_v.push_back(w);
    Subproblem plus = make_child(sub, g.induced_by_indices(without_v), 1);
    plus.committed.insert(g.label(v));
    plus.delta += 1;

    std::vector<char> drop(g.vertex_count(), 0);
    drop[v] = 1;
    for (int w : g.neighbors(v)) drop[w] = 1;
    std::vector<int> rest;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (!drop[w]) rest.push_back(w);
    Subproblem minus = make_child(sub, g.induced_by_indices(rest), 2);
    for (int w : g.neighbors(v)) minus.committed.insert(g.label(w));
    minus.delta += g.degree(v);

    return {std::move(plus), std::move(minus)};
}

std::optional<Solution> combine_mc(std::optional<Solution> plus, std::optional<Solution> minus) {
    if (!plus) return minus;
    if (!minus) return plus;
    return plus->value >= minus->value ? plus : minus;
}

std::optional<Solution> combine_mvc(std::optional<Solution> plus, std::optional<Solution> minus) {
    if (!plus) return minus;
    if (!minus) return plus;
    return plus->value <= minus->value ? plus : minus;
}

namespace {

class Engine {
public:
    Engine(const Graph& root, Problem problem, const EngineConfig& cfg, const LeafSolver& leaf)
        : root_(root), problem_(problem), cfg_(cfg), leaf_(leaf), incumbent_(problem) {}

    std::pair<Solution, RunMetrics> run() {
        const auto start = std::chrono::steady_clock::now();
        seed_incumbent();

        Subproblem root;
        root.graph = root_;
        solve(std::move(root));

        const auto best = incumbent_.best();
        if (!best) throw std::logic_error("decomposition finished without any solution");

        RunMetrics metrics;
        metrics.leaf_count = leaf_count_.load();
        metrics.pruned_count = pruned_.load();
        metrics.reduced_vertices = reduced_vertices_.load();
        metrics.reduced_edges = reduced_edges_.load();
        const double total =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double leaf_seconds = static_cast<double>(leaf_ns_.load()) * 1e-9;
        metrics.preprocessing_seconds = std::max(0.0, total - leaf_seconds);
        return {*best, metrics};
    }

private:
    void seed_incumbent() {
        if (cfg_.incumbent_source != IncumbentSource::Heuristic) return;
        Solution seed;
        if (problem_ == Problem::MaxClique) {
            seed.vertices = root_.greedy_clique();
        } else {
            const VertexSet independent = root_.complement().greedy_clique();
            for (int label : root_.labels())
                if (!independent.contains(label)) seed.vertices.insert(label);
        }
        seed.value = seed.vertices.size();
        incumbent_.offer(seed);
        frozen_threshold_ = seed.value;
    }

    // Heuristic mode prunes against the frozen root bound; decomposition
    // mode against the best solved leaf so far.
    std::optional<int> prune_threshold() const {
        if (cfg_.incumbent_source == IncumbentSource::Heuristic) return frozen_threshold_;
        return incumbent_.value();
    }

    Solution do_leaf(const Subproblem& sub) {
        leaf_count_.fetch_add(1, std::memory_order_relaxed);
        const auto start = std::chrono::steady_clock::now();
        Solution sol;
        try {
            sol = leaf_solve(sub, problem_, leaf_);
        } catch (const LimitError& e) {
            throw LimitError(subproblem_tag(sub) + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error(subproblem_tag(sub) + e.what());
        }
        leaf_ns_.fetch_add(std::chrono::duration_cast<std::chrono::nanoseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count(),
                           std::memory_order_relaxed);
        incumbent_.offer(sol);
        return sol;
    }

    static std::string subproblem_tag(const Subproblem& sub) {
        return "leaf subproblem " + std::to_string(sub.path) + " (depth " +
               std::to_string(sub.depth) + ", n=" + std::to_string(sub.graph.vertex_count()) +
               "): ";
    }

    bool prunable(const Subproblem& child) {
        if (cfg_.bounds == BoundFamily::None) return false;
        const auto threshold = prune_threshold();
        if (!threshold) return false;
        // equality prunes: matching the threshold is not an improvement
        if (problem_ == Problem::MaxClique)
            return child.delta + clique_upper(child.graph, cfg_.bounds) <= *threshold;
        return child.delta + cover_lower(child.graph, cfg_.bounds) >= *threshold;
    }

    void absorb(Subproblem& child, ReductionOutcome outcome) {
        child.graph = std::move(outcome.graph);
        child.committed.merge(outcome.committed);
        child.delta += outcome.delta;
        reduced_vertices_.fetch_add(outcome.removed_vertices, std::memory_order_relaxed);
        reduced_edges_.fetch_add(outcome.removed_edges, std::memory_order_relaxed);
    }

    Subproblem reduce(Subproblem child) {
        const auto enabled = [&](Reduction r) { return cfg_.reductions.count(r) > 0; };
        if (problem_ == Problem::MaxClique) {
            // cores are keyed to the residual threshold: a clique of size s
            // in the child graph lifts to delta + s, so only cliques beyond
            // threshold - delta are worth keeping
            const int incumbent_size =
                std::max(0, prune_threshold().value_or(0) - child.delta);
            if (enabled(Reduction::KCore)) {
                Graph shrunk = mc_kcore_reduce(child.graph, incumbent_size);
                reduced_vertices_.fetch_add(child.graph.vertex_count() - shrunk.vertex_count(),
                                            std::memory_order_relaxed);
                reduced_edges_.fetch_add(child.graph.edge_count() - shrunk.edge_count(),
                                         std::memory_order_relaxed);
                child.graph = std::move(shrunk);
            }
            if (enabled(Reduction::EdgeKCore)) {
                Graph shrunk = mc_edge_kcore_reduce(child.graph, incumbent_size);
                reduced_vertices_.fetch_add(child.graph.vertex_count() - shrunk.vertex_count(),
                                            std::memory_order_relaxed);
                reduced_edges_.fetch_add(child.graph.edge_count() - shrunk.edge_count(),
                                         std::memory_order_relaxed);
                child.graph = std::move(shrunk);
            }
            if (enabled(Reduction::Persistency))
                absorb(child, persistency_reduce(child, problem_));
        } else {
            if (enabled(Reduction::Nbvr)) absorb(child, nbvr_reduce(child));
            if (enabled(Reduction::Persistency))
                absorb(child, persistency_reduce(child, problem_));
        }
        return child;
    }

    // Bound, reduce, recurse. Returns the best solution in the child's
    // subtree, or nullopt if the child was discarded.
    std::optional<Solution> process(Subproblem child) {
        if (prunable(child)) {
            pruned_.fetch_add(1, std::memory_order_relaxed);
            return std::nullopt;
        }
        if (!cfg_.reductions.empty()) child = reduce(std::move(child));
        return solve(std::move(child));
    }

    std::optional<Solution> solve(Subproblem sub) {
        if (sub.graph.vertex_count() <= cfg_.cutoff) {
            // re-check against the freshest incumbent: a leaf that cannot
            // improve is not worth a solver call (think 1.6 s of annealer
            // time per subgraph)
            if (prunable(sub)) {
                pruned_.fetch_add(1, std::memory_order_relaxed);
                return std::nullopt;
            }
            return do_leaf(sub);
        }

        Rng rng(derive_seed(cfg_.seed, sub.path));
        const int v = select_vertex(sub.graph, cfg_.selection, rng);
        auto [plus, minus] = problem_ == Problem::MaxClique ? split_mc(sub, v)
                                                            : split_mvc(sub, v);

        std::optional<Solution> plus_result, minus_result;
        if (cfg_.workers > 1 && try_spawn()) {
            auto handle = std::async(std::launch::async, [this, child = std::move(plus)]() mutable {
                struct Release {
                    std::atomic<int>& active;
                    ~Release() { active.fetch_sub(1, std::memory_order_relaxed); }
                } release{active_};
                return process(std::move(child));
            });
            minus_result = process(std::move(minus));
            plus_result = handle.get();
        } else {
            bool plus_first = true;
            if (cfg_.traversal == Traversal::MinusFirst)
                plus_first = false;
            else if (cfg_.traversal == Traversal::SmallerFirst)
                plus_first = plus.graph.vertex_count() <= minus.graph.vertex_count();
            if (plus_first) {
                plus_result = process(std::move(plus));
                minus_result = process(std::move(minus));
            } else {
                minus_result = process(std::move(minus));
                plus_result = process(std::move(plus));
            }
        }
        return problem_ == Problem::MaxClique
                   ? combine_mc(std::move(plus_result), std::move(minus_result))
                   : combine_mvc(std::move(plus_result), std::move(minus_result));
    }

    bool try_spawn() {
        int cur = active_.load(std::memory_order_relaxed);
        while (cur < cfg_.workers)
            if (active_.compare_exchange_weak(cur, cur + 1, std::memory_order_relaxed))
                return true;
        return false;
    }

    const Graph& root_;
    Problem problem_;
    const EngineConfig& cfg_;
    const LeafSolver& leaf_;
    Incumbent incumbent_;
    std::optional<int> frozen_threshold_;
    std::atomic<long> leaf_count_{0};
    std::atomic<long> pruned_{0};
    std::atomic<long> reduced_vertices_{0};
    std::atomic<long> reduced_edges_{0};
    std::atomic<long long> leaf_ns_{0};
    std::atomic<int> active_{1};
};

} // namespace

std::pair<Solution, RunMetrics> decompose_and_solve(const Graph& g, Problem problem,
                                                    const EngineConfig& cfg,
                                                    const LeafSolver& leaf) {
    if (cfg.cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
    Engine engine(g, problem, cfg, leaf);
    return engine.run();
}

} // namespace qdeco
