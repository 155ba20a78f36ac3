#include "qdeco/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "qdeco/errors.hpp"
#include "qdeco/rng.hpp"

namespace qdeco {
namespace {

void check_exact_limit(const Graph& g, const char* what) {
    if (g.vertex_count() > kExactSolverLimit)
        throw LimitError(std::string(what) + " is limited to " +
                         std::to_string(kExactSolverLimit) + " vertices, got " +
                         std::to_string(g.vertex_count()));
}

// Branch and bound over bitmask candidate sets. Candidates are expanded in
// ascending index order with the include branch first, which enumerates
// cliques in lexicographic order of their sorted vertex lists; recording
// only strict improvements therefore keeps the lexicographically smallest
// witness of the final size.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : n_(g.vertex_count()), nbr_(n_, 0) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u)) nbr_[u] |= std::uint64_t{1} << v;
    }

    std::vector<int> run() {
        current_.clear();
        best_.clear();
        const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << n_) - 1;
        expand(all);
        return best_;
    }

private:
    // Greedy coloring of the candidate subgraph; class count bounds the
    // largest clique inside `cand`.
    int color_bound(std::uint64_t cand) const {
        int classes = 0;
        std::uint64_t color_mask[64];
        for (std::uint64_t rest = cand; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            int c = 0;
            while (c < classes && (color_mask[c] & nbr_[v]) != 0) ++c;
            if (c == classes) color_mask[classes++] = 0;
            color_mask[c] |= std::uint64_t{1} << v;
        }
        return classes;
    }

    void expand(std::uint64_t cand) {
        if (current_.size() > best_.size()) best_ = current_;
        while (cand) {
            if (current_.size() + color_bound(cand) <= best_.size()) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            current_.push_back(v);
            expand(cand & nbr_[v]);
            current_.pop_back();
        }
    }

    int n_;
    std::vector<std::uint64_t> nbr_;
    std::vector<int> current_;
    std::vector<int> best_;
};

// Flip-delta bookkeeping for the annealer: dense coefficient tables over the
// active variables of a Qubo.
struct DenseQubo {
    explicit DenseQubo(const Qubo& q) : vars(q.vars()), n(q.num_vars()), offset(q.offset()) {
        linear.assign(n, 0.0);
        adj.assign(n, {});
        std::vector<int> pos(vars.empty() ? 0 : vars.back() + 1, -1);
        for (int i = 0; i < n; ++i) pos[vars[i]] = i;
        for (const auto& [var, coeff] : q.linear_terms()) linear[pos[var]] += coeff;
        for (const auto& [key, coeff] : q.quadratic_terms()) {
            const int i = pos[key.first], j = pos[key.second];
            adj[i].emplace_back(j, coeff);
            adj[j].emplace_back(i, coeff);
            max_scale = std::max(max_scale, std::abs(coeff));
        }
        for (double c : linear) max_scale = std::max(max_scale, std::abs(c));
    }

    double energy(const std::vector<int>& x) const {
        double e = offset;
        for (int i = 0; i < n; ++i) {
            if (!x[i]) continue;
            e += linear[i];
            for (const auto& [j, coeff] : adj[i])
                if (j > i && x[j]) e += coeff;
        }
        return e;
    }

    double flip_delta(const std::vector<int>& x, int i) const {
        double field = linear[i];
        for (const auto& [j, coeff] : adj[i]) field += coeff * x[j];
        return x[i] ? -field : field;
    }

    std::vector<int> vars;
    int n;
    double offset;
    std::vector<double> linear;
    std::vector<std::vector<std::pair<int, double>>> adj;
    double max_scale = 0.0;
};

Solution decode_clique(const Subproblem& sub, const Assignment& sample) {
    // keep each supported vertex only if adjacent to everything kept so far
    const Graph& g = sub.graph;
    std::vector<int> kept;
    for (const auto& [var, value] : sample.values) {
        if (!value) continue;
        bool ok = true;
        for (int u : kept)
            if (!g.has_edge(u, var)) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(var);
    }
    Solution sol;
    for (int v : kept) sol.vertices.insert(g.label(v));
    sol.value = static_cast<int>(kept.size());
    return sol;
}

Solution decode_cover(const Subproblem& sub, const Assignment& sample) {
    const Graph& g = sub.graph;
    std::vector<char> in_cover(g.vertex_count(), 0);
    for (const auto& [var, value] : sample.values)
        if (value) in_cover[var] = 1;
    // repair: any edge still uncovered takes its higher-degree endpoint
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u || in_cover[u] || in_cover[v]) continue;
            const int pick = g.degree(v) > g.degree(u) ? v : u; // ties to the lower index
            in_cover[pick] = 1;
        }
    Solution sol;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_cover[v]) sol.vertices.insert(g.label(v));
    sol.value = sol.vertices.size();
    return sol;
}

} // namespace

Solution exact_mc(const Graph& g) {
    check_exact_limit(g, "exact clique solver");
    Solution sol;
    if (g.vertex_count() == 0) return sol;
    CliqueSearch search(g);
    for (int v : search.run()) sol.vertices.insert(g.label(v));
    sol.value = sol.vertices.size();
    return sol;
}

Solution exact_mvc(const Graph& g) {
    check_exact_limit(g, "exact vertex cover solver");
    const Solution clique = exact_mc(g.complement());
    Solution sol;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!clique.vertices.contains(g.label(v))) sol.vertices.insert(g.label(v));
    sol.value = sol.vertices.size();
    return sol;
}

AnnealResult anneal_qubo(const Qubo& q, const AnnealParams& params, std::uint64_t seed) {
    if (params.num_reads < 1 || params.sweeps < 1)
        throw std::invalid_argument("annealing needs at least one read and one sweep");
    const DenseQubo dense(q);

    double t_hot = params.t_hot;
    if (t_hot <= 0.0) {
        const double scale = std::max(dense.max_scale, 1.0);
        t_hot = scale / std::log(1.0 / 0.8); // accept scale-sized uphill moves w.p. ~0.8
    }
    const double t_cold = std::max(params.t_cold, 1e-9);
    const double decay = params.sweeps > 1
                             ? std::pow(t_cold / t_hot, 1.0 / (params.sweeps - 1))
                             : 1.0;

    AnnealResult result;
    result.summary.num_reads = params.num_reads;
    result.summary.sweeps = params.sweeps;

    std::vector<int> best_x(dense.n, 0);
    double best_energy = 0.0;
    bool have_best = false;
    double energy_sum = 0.0;

    for (int read = 0; read < params.num_reads; ++read) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(read)));
        std::vector<int> x(dense.n);
        for (int i = 0; i < dense.n; ++i) x[i] = static_cast<int>(rng.next_u64() & 1);

        double energy = dense.energy(x);
        std::vector<int> read_best_x = x;
        double read_best = energy;

        double temp = t_hot;
        for (int sweep = 0; sweep < params.sweeps; ++sweep) {
            for (int i = 0; i < dense.n; ++i) {
                const double delta = dense.flip_delta(x, i);
                if (delta <= 0.0 || rng.next_double() < std::exp(-delta / temp)) {
                    x[i] = 1 - x[i];
                    energy += delta;
                    if (energy < read_best) {
                        read_best = energy;
                        read_best_x = x;
                    }
                }
            }
            temp *= decay;
        }

        energy_sum += read_best;
        if (!have_best || read_best < best_energy - 1e-12) {
            have_best = true;
            best_energy = read_best;
            best_x = read_best_x;
            result.summary.best_read_count = 1;
        } else if (std::abs(read_best - best_energy) <= 1e-12) {
            ++result.summary.best_read_count;
        }
    }

    for (int i = 0; i < dense.n; ++i) result.best.values[dense.vars[i]] = best_x[i];
    result.best_value = best_energy;
    result.summary.mean_read_energy = energy_sum / params.num_reads;
    return result;
}

Solution leaf_solve(const Subproblem& sub, Problem problem, const LeafSolver& solver) {
    if (solver.invocations) solver.invocations->fetch_add(1, std::memory_order_relaxed);

    Solution local;
    if (solver.kind == LeafSolver::Kind::Exact) {
        local = problem == Problem::MaxClique ? exact_mc(sub.graph) : exact_mvc(sub.graph);
    } else {
        const Qubo q = problem == Problem::MaxClique ? build_mc_qubo(sub.graph)
                                                     : build_mvc_qubo(sub.graph);
        const auto annealed = anneal_qubo(q, solver.anneal, derive_seed(solver.seed, sub.path));
        local = problem == Problem::MaxClique ? decode_clique(sub, annealed.best)
                                              : decode_cover(sub, annealed.best);
    }

    Solution lifted;
    lifted.vertices = sub.committed;
    lifted.vertices.merge(local.vertices);
    lifted.value = sub.delta + local.value;
    return lifted;
}

} // namespace qdeco
