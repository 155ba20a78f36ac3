#include "qdeco/report.hpp"

#include <json.hpp>

#include "qdeco/names.hpp"

namespace qdeco {

std::string result_document_json(const std::string& input, Problem problem, const Graph& g,
                                 const Solution& solution, const RunMetrics& metrics,
                                 const EngineConfig& cfg, const LeafSolver& solver,
                                 double anneal_seconds) {
    nlohmann::json doc;
    doc["problem"] = to_string(problem);
    doc["input"] = input;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["objective"] = solution.value;
    doc["solution_vertices"] = solution.vertices.labels();
    doc["leaf_count"] = metrics.leaf_count;
    doc["preprocessing_seconds"] = metrics.preprocessing_seconds;
    doc["predicted_seconds"] = metrics.predicted_seconds;
    doc["seed"] = cfg.seed;

    nlohmann::json config;
    config["cutoff"] = cfg.cutoff;
    config["select"] = to_string(cfg.selection);
    config["bounds"] = to_string(cfg.bounds);
    config["lower_bound"] = to_string(cfg.incumbent_source);
    config["reductions"] = reductions_to_string(cfg.reductions);
    config["traversal"] = to_string(cfg.traversal);
    config["workers"] = cfg.workers;
    config["solver"] = to_string(solver.kind);
    config["reads"] = solver.anneal.num_reads;
    config["sweeps"] = solver.anneal.sweeps;
    config["anneal_seconds"] = anneal_seconds;
    // preprocessing time is wall time minus leaf-solver time, not CPU time
    config["preprocessing_clock"] = "wall_minus_leaf";
    doc["config"] = std::move(config);
    return doc.dump(2);
}

} // namespace qdeco
