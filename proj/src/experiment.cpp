#include "qdeco/experiment.hpp"

#include <cstdio>
#include <ostream>

#include "qdeco/names.hpp"

namespace qdeco {
namespace {

std::string fmt_density(double d) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", d);
    return buf;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", s);
    return buf;
}

} // namespace

Preset dbk_preset() {
    Preset p;
    p.problem = Problem::MaxClique;
    p.config.selection = Selection::LowDegree;
    p.config.bounds = BoundFamily::Chromatic;
    p.config.incumbent_source = IncumbentSource::Decomposition;
    p.config.reductions = {Reduction::KCore};
    return p;
}

Preset dbr_preset() {
    Preset p;
    p.problem = Problem::MinVertexCover;
    p.config.selection = Selection::HighDegree;
    p.config.bounds = BoundFamily::Chromatic;
    p.config.incumbent_source = IncumbentSource::Decomposition;
    p.config.reductions = {Reduction::Nbvr};
    return p;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentGrid& grid) {
    std::vector<ExperimentRecord> records;
    std::uint64_t trial_ordinal = 0;
    for (int n : grid.sizes) {
        for (double density : grid.densities) {
            for (int trial = 0; trial < grid.trials; ++trial, ++trial_ordinal) {
                // one graph per trial, shared by every cutoff so sweeps
                // compare like against like
                const std::uint64_t seed = derive_seed(grid.master_seed, trial_ordinal);
                const Graph g = Graph::erdos_renyi(n, density, seed);
                for (int cutoff : grid.cutoffs) {
                    EngineConfig cfg = grid.base;
                    cfg.cutoff = cutoff;
                    cfg.seed = seed;
                    LeafSolver leaf; // exact leaves: experiments predict anneal time
                    const auto [solution, metrics] =
                        decompose_and_solve(g, grid.problem, cfg, leaf);

                    ExperimentRecord rec;
                    rec.n = n;
                    rec.density = density;
                    rec.seed = seed;
                    rec.problem = grid.problem;
                    rec.strategy = cfg.selection;
                    rec.bounds = cfg.bounds;
                    rec.incumbent_source = cfg.incumbent_source;
                    rec.reductions = cfg.reductions;
                    rec.cutoff = cutoff;
                    rec.objective = solution.value;
                    rec.leaf_count = metrics.leaf_count;
                    rec.preprocessing_seconds = metrics.preprocessing_seconds;
                    rec.predicted_seconds = predicted_time(
                        metrics.leaf_count, metrics.preprocessing_seconds, grid.anneal_seconds);
                    records.push_back(std::move(rec));
                }
            }
        }
    }
    return records;
}

std::string experiment_csv_header() {
    return "n,density,seed,problem,strategy,bounds,reductions,cutoff,objective,"
           "leaf_count,preprocessing_seconds,predicted_seconds";
}

std::string to_csv_row(const ExperimentRecord& r) {
    std::string bounds = to_string(r.bounds) + "+" + to_string(r.incumbent_source);
    return std::to_string(r.n) + "," + fmt_density(r.density) + "," + std::to_string(r.seed) +
           "," + to_string(r.problem) + "," + to_string(r.strategy) + "," + bounds + "," +
           reductions_to_string(r.reductions) + "," + std::to_string(r.cutoff) + "," +
           std::to_string(r.objective) + "," + std::to_string(r.leaf_count) + "," +
           fmt_seconds(r.preprocessing_seconds) + "," + fmt_seconds(r.predicted_seconds);
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << experiment_csv_header() << "\n";
    for (const auto& rec : records) out << to_csv_row(rec) << "\n";
}

} // namespace qdeco
