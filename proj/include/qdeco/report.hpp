#ifndef QDECO_REPORT_HPP
#define QDECO_REPORT_HPP

#include <string>

#include "qdeco/decomposer.hpp"

namespace qdeco {

// JSON result document for a single solve. Field names are part of the
// output contract:
// {"problem","input","n","m","objective","solution_vertices":[...],
//  "leaf_count","preprocessing_seconds","predicted_seconds","config":{...},
//  "seed"}
std::string result_document_json(const std::string& input, Problem problem, const Graph& g,
                                 const Solution& solution, const RunMetrics& metrics,
                                 const EngineConfig& cfg, const LeafSolver& solver,
                                 double anneal_seconds);

} // namespace qdeco

#endif // QDECO_REPORT_HPP
