#ifndef QDECO_METRICS_HPP
#define QDECO_METRICS_HPP

namespace qdeco {

// Per-run measurements. leaf_count is the number of leaf-solver invocations
// (the subgraph count); preprocessing_seconds is wall time spent outside the
// leaf solver.
struct RunMetrics {
    long leaf_count = 0;
    double preprocessing_seconds = 0.0;
    double predicted_seconds = 0.0;
    long pruned_count = 0;
    long reduced_vertices = 0;
    long reduced_edges = 0;
};

// Predicted wall time of a run whose leaves are handed to an annealer that
// needs anneal_seconds per subgraph: leaf_count * anneal_seconds +
// preprocessing_seconds.
inline double predicted_time(long leaf_count, double preprocessing_seconds,
                             double anneal_seconds) {
    return static_cast<double>(leaf_count) * anneal_seconds + preprocessing_seconds;
}

} // namespace qdeco

#endif // QDECO_METRICS_HPP
