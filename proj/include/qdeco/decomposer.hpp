#ifndef QDECO_DECOMPOSER_HPP
#define QDECO_DECOMPOSER_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <utility>

#include "qdeco/bounds.hpp"
#include "qdeco/metrics.hpp"
#include "qdeco/reductions.hpp"
#include "qdeco/rng.hpp"
#include "qdeco/solvers.hpp"
#include "qdeco/subproblem.hpp"

namespace qdeco {

enum class Selection { LowDegree, MedianDegree, HighDegree, Random };

// Order in which the two children of a split are explored (single worker).
// SmallerFirst descends into the smaller child first so a leaf solution is
// available early for pruning.
enum class Traversal { PlusFirst, MinusFirst, SmallerFirst };

// Source of the prune threshold. Heuristic prunes against the greedy-clique
// bound of the root instance, computed once (the threshold is frozen, so the
// decomposition tree does not depend on leaf results or on the cutoff).
// Decomposition prunes against the best solved-leaf value found so far.
// Either way the best feasible solution seen anywhere is what gets returned.
enum class IncumbentSource { Heuristic, Decomposition };

struct EngineConfig {
    int cutoff = 64; // subproblems at most this large go straight to the leaf solver
    Selection selection = Selection::LowDegree;
    BoundFamily bounds = BoundFamily::Chromatic;
    IncumbentSource incumbent_source = IncumbentSource::Heuristic;
    std::set<Reduction> reductions;
    Traversal traversal = Traversal::SmallerFirst;
    std::uint64_t seed = 0;
    int workers = 1;
};

// Best feasible solution found so far. Shared across workers; value only
// ever improves, and a stale read merely weakens pruning.
class Incumbent {
public:
    explicit Incumbent(Problem problem) : problem_(problem) {}

    // Adopts the candidate if it beats (or first sets) the incumbent.
    bool offer(const Solution& candidate);
    std::optional<int> value() const;
    std::optional<Solution> best() const;

private:
    Problem problem_;
    mutable std::mutex mutex_;
    std::optional<Solution> best_;
};

// Low / high return a vertex of minimum / maximum degree; median returns one
// whose degree is the lower median of the degree sequence. Ties (and the
// Random strategy) are broken by a uniform draw.
int select_vertex(const Graph& g, Selection strategy, Rng& rng);

// MC split at v: the plus child assumes v is in the clique (graph = induced
// neighborhood of v, delta + 1); the minus child assumes it is not (v
// removed). Both children are strictly smaller than the parent.
std::pair<Subproblem, Subproblem> split_mc(const Subproblem& sub, int v);

// MVC split at v: the plus child puts v into the cover (v removed,
// delta + 1); the minus child leaves v out, which forces all its neighbors
// into the cover (v and N(v) removed, delta + |N(v)|).
std::pair<Subproblem, Subproblem> split_mvc(const Subproblem& sub, int v);

// Branch combination; a pruned branch (nullopt) never wins, and ties prefer
// the plus branch.
std::optional<Solution> combine_mc(std::optional<Solution> plus, std::optional<Solution> minus);
std::optional<Solution> combine_mvc(std::optional<Solution> plus, std::optional<Solution> minus);

// Recursively decomposes g until subproblems fit under cfg.cutoff, pruning
// children whose bound cannot beat the incumbent and shrinking them with the
// configured reductions, then solves leaves with `leaf`. With an exact leaf
// solver the returned objective is optimal; the returned set is feasible in
// g either way. metrics.predicted_seconds is left for the caller to fill.
std::pair<Solution, RunMetrics> decompose_and_solve(const Graph& g, Problem problem,
                                                    const EngineConfig& cfg,
                                                    const LeafSolver& leaf);

} // namespace qdeco

#endif // QDECO_DECOMPOSER_HPP
