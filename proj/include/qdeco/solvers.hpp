#ifndef QDECO_SOLVERS_HPP
#define QDECO_SOLVERS_HPP

#include <atomic>
#include <cstdint>
#include <memory>

#include "qdeco/qubo.hpp"
#include "qdeco/subproblem.hpp"

namespace qdeco {

// Exact solvers are limited to bitmask-sized instances; larger leaves belong
// to the annealing path.
inline constexpr int kExactSolverLimit = 64;

// Deterministic maximum clique via bitset branch and bound with a greedy
// coloring bound. Among all maximum cliques it returns the one whose sorted
// label list is lexicographically smallest.
Solution exact_mc(const Graph& g);

// Exact minimum vertex cover via the complement identity
// MVC(g) = n - omega(complement(g)); witness is the complement of the clique
// found by exact_mc, hence equally deterministic.
Solution exact_mvc(const Graph& g);

struct AnnealParams {
    int num_reads = 100;
    int sweeps = 200;
    // Geometric temperature schedule; t_hot <= 0 picks a start temperature
    // where moves of the largest coefficient scale are accepted with
    // probability ~0.8.
    double t_hot = 0.0;
    double t_cold = 0.05;
};

struct AnnealSummary {
    int num_reads = 0;
    int sweeps = 0;
    int best_read_count = 0; // reads whose best energy matched the overall best
    double mean_read_energy = 0.0;
};

struct AnnealResult {
    Assignment best;
    double best_value = 0.0;
    AnnealSummary summary;
};

// Best-of-num_reads single-bit-flip Metropolis annealing. Each read derives
// its stream from (seed, read index), so results are identical regardless of
// how reads are scheduled. The returned value is the energy of a real
// visited assignment and therefore never undercuts the true minimum.
AnnealResult anneal_qubo(const Qubo& q, const AnnealParams& params, std::uint64_t seed);

struct LeafSolver {
    enum class Kind { Exact, Anneal };
    Kind kind = Kind::Exact;
    AnnealParams anneal;
    std::uint64_t seed = 0;
    // Optional independent invocation counter (shared so LeafSolver stays
    // copyable across worker threads).
    std::shared_ptr<std::atomic<long>> invocations;
};

// Solves one leaf subproblem and lifts the answer into original labels:
// the leaf's vertex set is merged with the committed set and the objective
// is offset by delta. Annealed samples are decoded from the QUBO support and
// repaired to feasibility first (MC: drop non-adjacent vertices; MVC: add
// endpoints of uncovered edges).
Solution leaf_solve(const Subproblem& sub, Problem problem, const LeafSolver& solver);

} // namespace qdeco

#endif // QDECO_SOLVERS_HPP
