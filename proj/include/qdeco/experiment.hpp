#ifndef QDECO_EXPERIMENT_HPP
#define QDECO_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdeco/decomposer.hpp"

namespace qdeco {

// Fully configured algorithm bundles.
struct Preset {
    Problem problem;
    EngineConfig config;
};

// MC with low-degree selection, chromatic upper / decomposition lower
// bounds, and the vertex k-core reduction.
Preset dbk_preset();

// MVC with high-degree selection, chromatic lower / decomposition upper
// bounds, and neighbor-based vertex removal.
Preset dbr_preset();

// One row of an experiment sweep.
struct ExperimentRecord {
    int n = 0;
    double density = 0.0;
    std::uint64_t seed = 0;
    Problem problem = Problem::MaxClique;
    Selection strategy = Selection::LowDegree;
    BoundFamily bounds = BoundFamily::Chromatic;
    IncumbentSource incumbent_source = IncumbentSource::Heuristic;
    std::set<Reduction> reductions;
    int cutoff = 0;
    int objective = 0;
    long leaf_count = 0;
    double preprocessing_seconds = 0.0;
    double predicted_seconds = 0.0;
};

struct ExperimentGrid {
    std::vector<int> sizes;
    std::vector<double> densities;
    std::vector<int> cutoffs;
    int trials = 1;
    Problem problem = Problem::MaxClique;
    EngineConfig base;            // per-trial runs inherit everything but cutoff/seed
    double anneal_seconds = 1.6;  // per-leaf annealer wall time used in predictions
    std::uint64_t master_seed = 0;
};

// Runs one seeded G(n,p) trial per (size, density, cutoff, trial) grid point
// with exact leaves, in deterministic grid order. Each trial's graph seed
// derives from (master_seed, grid ordinal).
std::vector<ExperimentRecord> run_experiment(const ExperimentGrid& grid);

// Fixed schema:
// n,density,seed,problem,strategy,bounds,reductions,cutoff,objective,
// leaf_count,preprocessing_seconds,predicted_seconds
std::string experiment_csv_header();
std::string to_csv_row(const ExperimentRecord& record);
void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

} // namespace qdeco

#endif // QDECO_EXPERIMENT_HPP
