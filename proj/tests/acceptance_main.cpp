// Acceptance suite: one self-contained check per release criterion, each
// printing a PASS/FAIL line. Exits nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qdeco/decomposer.hpp"
#include "qdeco/experiment.hpp"
#include "qdeco/qubo.hpp"

using namespace qdeco;
namespace oracle = qdeco::testing;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Criterion> g_results;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    g_results.push_back({id, name, pass, detail});
    std::printf("[%2d] %s  %-34s %s\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

Graph corpus_graph(int index, int n_lo, int n_hi, std::uint64_t salt) {
    const int n = n_lo + index % (n_hi - n_lo + 1);
    const double p = 0.1 + 0.1 * (index % 9);
    return Graph::erdos_renyi(n, p, derive_seed(salt, index));
}

long median(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

// 1. End-to-end exactness across strategies and cutoffs.
void criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    int runs = 0, mismatches = 0, infeasible = 0;
    LeafSolver exact;
    for (int i = 0; i < 300; ++i) {
        const Graph g = corpus_graph(i, 8, 20, 1001);
        const int omega = oracle::oracle_clique_number(g);
        const int mvc = oracle::oracle_mvc_size(g);
        for (Selection sel : {Selection::LowDegree, Selection::MedianDegree,
                              Selection::HighDegree, Selection::Random}) {
            for (int cutoff : {4, 8}) {
                EngineConfig cfg;
                cfg.cutoff = cutoff;
                cfg.selection = sel;
                cfg.seed = derive_seed(1002, i);
                const auto [mc_sol, m1] =
                    decompose_and_solve(g, Problem::MaxClique, cfg, exact);
                const auto [vc_sol, m2] =
                    decompose_and_solve(g, Problem::MinVertexCover, cfg, exact);
                runs += 2;
                if (mc_sol.value != omega || vc_sol.value != mvc) ++mismatches;
                if (!oracle::check_clique(g, mc_sol.vertices.labels()) ||
                    !oracle::check_cover(g, vc_sol.vertices.labels()))
                    ++infeasible;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%d runs, %d objective mismatches, %d infeasible sets, %.1fs", runs,
                  mismatches, infeasible, secs);
    report(1, "oracle equivalence", mismatches == 0 && infeasible == 0 && secs < 300.0, detail);
}

// 2. MVC(g) + omega(complement g) = n.
void criterion_complementarity() {
    int violations = 0;
    for (int i = 0; i < 300; ++i) {
        const Graph g = corpus_graph(i, 8, 20, 1001);
        if (oracle::oracle_mvc_size(g) + oracle::oracle_clique_number(g.complement()) !=
            g.vertex_count())
            ++violations;
    }
    report(2, "complementarity identity", violations == 0,
           "300 graphs, " + std::to_string(violations) + " violations");
}

// 3. All bounds bracket the oracle values.
void criterion_bound_soundness() {
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
        const Graph g = corpus_graph(i, 4, 14, 2002);
        const int omega = oracle::oracle_clique_number(g);
        const int mvc = oracle::oracle_mvc_size(g);
        if (clique_upper_chromatic(g) < omega) ++violations;
        if (clique_upper_deterministic(g) < omega) ++violations;
        if (clique_lower_heuristic(g) > omega) ++violations;
        const auto [lo, hi] = cover_bounds(g);
        if (lo > mvc || hi < mvc) ++violations;
    }
    report(3, "bound soundness", violations == 0,
           "200 graphs x 4 bounds, " + std::to_string(violations) + " violations");
}

// 4. Each reduction alone leaves end-to-end objectives unchanged.
void criterion_reduction_safety() {
    int mismatches = 0, runs = 0;
    LeafSolver exact;
    for (int i = 0; i < 120; ++i) {
        const Graph g = corpus_graph(i, 6, 16, 3003);
        EngineConfig base;
        base.cutoff = 4;
        base.bounds = BoundFamily::Chromatic;
        base.incumbent_source = IncumbentSource::Decomposition;
        base.seed = derive_seed(3004, i);
        const int mc_ref = decompose_and_solve(g, Problem::MaxClique, base, exact).first.value;
        const int vc_ref =
            decompose_and_solve(g, Problem::MinVertexCover, base, exact).first.value;
        for (Reduction r : {Reduction::KCore, Reduction::EdgeKCore, Reduction::Persistency}) {
            EngineConfig cfg = base;
            cfg.reductions = {r};
            ++runs;
            if (decompose_and_solve(g, Problem::MaxClique, cfg, exact).first.value != mc_ref)
                ++mismatches;
        }
        for (Reduction r : {Reduction::Nbvr, Reduction::Persistency}) {
            EngineConfig cfg = base;
            cfg.reductions = {r};
            ++runs;
            if (decompose_and_solve(g, Problem::MinVertexCover, cfg, exact).first.value !=
                vc_ref)
                ++mismatches;
        }
    }
    report(4, "reduction safety", mismatches == 0,
           std::to_string(runs) + " reduced runs, " + std::to_string(mismatches) +
               " objective changes");
}

// 5. Predicted-time model reproduces the published table arithmetic.
void criterion_predicted_time_tables() {
    struct Row {
        long leaves;
        double prep;
        double expected;
    };
    // (subgraphs, preprocessing seconds, predicted seconds); two rows whose
    // printed times disagree with their own inputs beyond 5e-4 carry the
    // recomputed value instead
    const Row rows[16] = {
        {1, 0.0701, 1.670},  {1, 0.016, 1.616},  {1, 0.0167, 1.617}, {1, 0.0199, 1.6199},
        {1, 0.0329, 1.633},  {1, 0.0756, 1.676}, {1, 0.0846, 1.685}, {531, 2.611, 852.211},
        {1, 0.104, 1.704},   {2, 0.0233, 3.223}, {1, 0.0205, 1.620}, {1, 0.0161, 1.6161},
        {1, 0.060, 1.660},   {6, 0.169, 9.769},  {22, 0.350, 35.550}, {2, 0.536, 3.736},
    };
    int failures = 0;
    double worst = 0.0;
    for (const Row& row : rows) {
        const double got = predicted_time(row.leaves, row.prep, 1.6);
        worst = std::max(worst, std::abs(got - row.expected));
        if (std::abs(got - row.expected) > 5e-4) ++failures;
    }
    char detail[120];
    std::snprintf(detail, sizeof(detail), "16 rows, worst abs error %.2e, %d failures", worst,
                  failures);
    report(5, "predicted-time tables", failures == 0, detail);
}

// 6. QUBO minima equal the graph optima; probing conserves minima; Ising
//    values agree on every corner.
void criterion_qubo_correctness() {
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        const Graph g = corpus_graph(i, 2, 12, 4004);
        if (oracle::enumerate_qubo(build_mc_qubo(g)).min_value !=
            -static_cast<double>(oracle::oracle_clique_number(g)))
            ++failures;
        if (oracle::enumerate_qubo(build_mvc_qubo(g)).min_value !=
            static_cast<double>(oracle::oracle_mvc_size(g)))
            ++failures;
    }
    Rng rng(4040);
    int probe_failures = 0;
    for (int i = 0; i < 100; ++i) {
        const Qubo q = oracle::random_qubo(2 + rng.uniform_int(9), rng);
        const int var = q.vars()[rng.uniform_int(q.num_vars())];
        const double full = oracle::enumerate_qubo(q).min_value;
        const double split = std::min(oracle::enumerate_qubo(q.probe(var, 0)).min_value,
                                      oracle::enumerate_qubo(q.probe(var, 1)).min_value);
        if (full != split) ++probe_failures;
    }
    Rng rng2(4141);
    int ising_failures = 0;
    for (int i = 0; i < 100; ++i) {
        const Qubo q = oracle::random_qubo(2 + rng2.uniform_int(9), rng2);
        const IsingModel m = q.to_ising();
        const int k = q.num_vars();
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
            const Assignment bits = oracle::assignment_from_mask(q.vars(), mask);
            double iv = m.offset;
            for (const auto& [var, h] : m.fields) iv += h * (2 * bits.values.at(var) - 1);
            for (const auto& [key, j] : m.couplings)
                iv += j * (2 * bits.values.at(key.first) - 1) *
                      (2 * bits.values.at(key.second) - 1);
            const double qv = q.evaluate(bits);
            if (std::abs(qv - iv) > 1e-9 * std::max(1.0, std::abs(qv))) ++ising_failures;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "minima failures %d, probe failures %d, ising failures %d", failures,
                  probe_failures, ising_failures);
    report(6, "qubo correctness", failures == 0 && probe_failures == 0 && ising_failures == 0,
           detail);
}

// 7. Persistency fixings extend to an enumerated global minimizer.
void criterion_persistency_validity() {
    Rng rng(5005);
    int violations = 0;
    for (int i = 0; i < 100; ++i) {
        const Qubo q = oracle::random_qubo(2 + rng.uniform_int(9), rng);
        const Assignment fixed = persistencies(q);
        const auto e = oracle::enumerate_qubo(q);
        bool consistent = false;
        for (std::uint32_t mask : e.minimizer_masks) {
            const Assignment full = oracle::assignment_from_mask(e.vars, mask);
            bool agrees = true;
            for (const auto& [var, value] : fixed.values)
                agrees = agrees && full.values.at(var) == value;
            if (agrees) {
                consistent = true;
                break;
            }
        }
        if (!consistent) ++violations;
    }
    report(7, "persistency validity", violations == 0,
           "100 instances, " + std::to_string(violations) + " inconsistent fixings");
}

// 8. Annealer never beats the enumeration and usually matches it.
void criterion_annealer_calibration() {
    Rng rng(6006);
    AnnealParams params; // defaults: 100 reads x 200 sweeps
    int admissibility_failures = 0, hits = 0;
    for (int i = 0; i < 100; ++i) {
        const Qubo q = oracle::random_qubo(4 + rng.uniform_int(13), rng); // up to 16 vars
        const double truth = oracle::enumerate_qubo(q).min_value;
        const auto res = anneal_qubo(q, params, derive_seed(6007, i));
        if (res.best_value < truth) ++admissibility_failures;
        if (res.best_value == truth) ++hits;
    }
    char detail[120];
    std::snprintf(detail, sizeof(detail), "hit rate %d%%, %d admissibility failures", hits,
                  admissibility_failures);
    report(8, "annealer admissibility+calibration", admissibility_failures == 0 && hits >= 90,
           detail);
}

// 9. Vertex-selection trends of the plain decomposition match the study:
//    low degree wins for dense MC, high degree wins for sparse MVC.
void criterion_strategy_trends() {
    EngineConfig plain;
    plain.bounds = BoundFamily::None;
    plain.incumbent_source = IncumbentSource::Decomposition;
    plain.cutoff = 16;
    LeafSolver exact;

    std::vector<long> mc_low, mc_high, vc_low, vc_high;
    for (int i = 1; i <= 30; ++i) {
        const Graph dense = Graph::erdos_renyi(40, 0.8, derive_seed(7007, i));
        EngineConfig cfg = plain;
        cfg.seed = i;
        cfg.selection = Selection::LowDegree;
        mc_low.push_back(decompose_and_solve(dense, Problem::MaxClique, cfg, exact)
                             .second.leaf_count);
        cfg.selection = Selection::HighDegree;
        mc_high.push_back(decompose_and_solve(dense, Problem::MaxClique, cfg, exact)
                              .second.leaf_count);

        const Graph sparse = Graph::erdos_renyi(40, 0.2, derive_seed(7008, i));
        cfg.selection = Selection::LowDegree;
        vc_low.push_back(decompose_and_solve(sparse, Problem::MinVertexCover, cfg, exact)
                             .second.leaf_count);
        cfg.selection = Selection::HighDegree;
        vc_high.push_back(decompose_and_solve(sparse, Problem::MinVertexCover, cfg, exact)
                              .second.leaf_count);
    }
    const long ml = median(mc_low), mh = median(mc_high);
    const long vl = median(vc_low), vh = median(vc_high);
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "MC p=0.8 median low=%ld high=%ld; MVC p=0.2 median high=%ld low=%ld", ml, mh,
                  vh, vl);
    report(9, "strategy trends", ml <= mh && vh <= vl, detail);
}

// 10. Larger cutoffs never produce more leaves (plain decomposition, where
//     the frontiers are nested by construction).
void criterion_cutoff_scaling() {
    EngineConfig plain;
    plain.bounds = BoundFamily::None;
    plain.incumbent_source = IncumbentSource::Decomposition;
    plain.selection = Selection::LowDegree;
    LeafSolver exact;
    int violations = 0;
    for (int i = 1; i <= 20; ++i) {
        const Graph g = Graph::erdos_renyi(60, 0.5, derive_seed(8008, i));
        long previous = -1;
        bool monotone = true;
        for (int cutoff : {8, 16, 32}) {
            EngineConfig cfg = plain;
            cfg.cutoff = cutoff;
            cfg.seed = i;
            const long leaves =
                decompose_and_solve(g, Problem::MaxClique, cfg, exact).second.leaf_count;
            if (previous >= 0 && leaves > previous) monotone = false;
            previous = leaves;
        }
        if (!monotone) ++violations;
    }
    report(10, "cutoff scaling direction", violations == 0,
           "20 graphs x cutoffs 8/16/32, " + std::to_string(violations) + " violations");
}

} // namespace

int main() {
    std::printf("acceptance suite\n----------------\n");
    criterion_oracle_equivalence();
    criterion_complementarity();
    criterion_bound_soundness();
    criterion_reduction_safety();
    criterion_predicted_time_tables();
    criterion_qubo_correctness();
    criterion_persistency_validity();
    criterion_annealer_calibration();
    criterion_strategy_trends();
    criterion_cutoff_scaling();

    int passed = 0;
    for (const auto& c : g_results) passed += c.pass;
    std::printf("----------------\n%d/%zu criteria passed\n", passed, g_results.size());
    return passed == static_cast<int>(g_results.size()) ? 0 : 1;
}
