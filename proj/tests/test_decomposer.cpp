#include <doctest.h>

#include <atomic>
#include <memory>
#include <set>

#include "oracles.hpp"
#include "qdeco/decomposer.hpp"
#include "qdeco/errors.hpp"

using namespace qdeco;
namespace oracle = qdeco::testing;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

Subproblem wrap(Graph g) {
    Subproblem sub;
    sub.graph = std::move(g);
    return sub;
}

Solution make_solution(std::vector<int> labels) {
    Solution s;
    s.vertices = VertexSet(std::move(labels));
    s.value = s.vertices.size();
    return s;
}

} // namespace

TEST_SUITE("decomposer") {

TEST_CASE("vertex selection strategies") {
    const Graph p3 = Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    Rng rng(1);
    CHECK(select_vertex(p3, Selection::HighDegree, rng) == 1);
    for (int i = 0; i < 10; ++i) {
        const int low = select_vertex(p3, Selection::LowDegree, rng);
        CHECK((low == 0 || low == 2));
    }
    // degree sequence 1,2,2,3: lower median is 2
    const Graph paw = Graph::from_edges(
        4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    for (int i = 0; i < 10; ++i) {
        const int med = select_vertex(paw, Selection::MedianDegree, rng);
        CHECK((med == 2 || med == 3));
    }
    std::set<int> seen;
    for (int i = 0; i < 60; ++i) seen.insert(select_vertex(p3, Selection::Random, rng));
    CHECK(seen.size() == 3);
    CHECK_THROWS_AS(select_vertex(Graph::from_edges(0, {}), Selection::LowDegree, rng),
                    std::invalid_argument);
}

TEST_CASE("clique split produces the neighborhood and the deletion child") {
    const auto [plus, minus] = split_mc(wrap(Graph::erdos_renyi(3, 1.0, 1)), 0);
    CHECK(plus.graph.vertex_count() == 2);
    CHECK(plus.graph.edge_count() == 1);
    CHECK(plus.committed.labels() == std::vector<int>{0});
    CHECK(plus.delta == 1);
    CHECK(minus.graph.vertex_count() == 2);
    CHECK(minus.delta == 0);
    CHECK(minus.committed.empty());

    const auto [splus, sminus] = split_mc(wrap(star(3)), 0);
    CHECK(splus.graph.vertex_count() == 3);
    CHECK(splus.graph.edge_count() == 0);
    CHECK(sminus.graph.vertex_count() == 3);
    CHECK(sminus.graph.edge_count() == 0);

    Subproblem isolated = wrap(Graph::from_edges(1, {}));
    const auto [iplus, iminus] = split_mc(isolated, 0);
    CHECK(iplus.graph.vertex_count() == 0);
    CHECK(iplus.committed.labels() == std::vector<int>{0});

    CHECK_THROWS_AS(split_mc(wrap(cycle(3)), 5), std::invalid_argument);
}

TEST_CASE("cover split commits either the vertex or its whole neighborhood") {
    const auto [plus, minus] = split_mvc(wrap(star(3)), 0);
    CHECK(plus.graph.vertex_count() == 3);
    CHECK(plus.graph.edge_count() == 0);
    CHECK(plus.delta == 1);
    CHECK(minus.graph.vertex_count() == 0);
    CHECK(minus.delta == 3);
    CHECK(minus.committed.labels() == std::vector<int>{1, 2, 3});

    const auto [kplus, kminus] = split_mvc(wrap(Graph::erdos_renyi(2, 1.0, 1)), 0);
    CHECK(kplus.delta == 1);
    CHECK(kminus.delta == 1); // committing the single neighbor

    Subproblem lonely = wrap(Graph::from_edges(1, {}));
    const auto [lplus, lminus] = split_mvc(lonely, 0);
    CHECK(lplus.delta == 1);
    CHECK(lminus.delta == 0);
    CHECK(lminus.graph.vertex_count() == 0);
}

TEST_CASE("branch combination prefers the winning side and survives pruning") {
    const auto a = make_solution({0, 1, 2});
    const auto b = make_solution({4, 5});
    CHECK(combine_mc(a, b)->value == 3);
    CHECK(combine_mvc(a, b)->value == 2);
    CHECK(combine_mc(std::nullopt, b)->value == 2);
    CHECK(combine_mvc(a, std::nullopt)->value == 3);
    CHECK(!combine_mc(std::nullopt, std::nullopt).has_value());
    // ties go to the plus branch
    const auto tie_plus = make_solution({1, 2});
    const auto tie_minus = make_solution({3, 4});
    CHECK(combine_mc(tie_plus, tie_minus)->vertices == tie_plus.vertices);
    CHECK(combine_mvc(tie_plus, tie_minus)->vertices == tie_plus.vertices);
}

TEST_CASE("decomposition solves the documented instances") {
    EngineConfig cfg;
    cfg.cutoff = 2;
    LeafSolver exact;
    const auto [k3, k3_metrics] =
        decompose_and_solve(Graph::erdos_renyi(3, 1.0, 1), Problem::MaxClique, cfg, exact);
    CHECK(k3.value == 3);
    CHECK(oracle::check_clique(Graph::erdos_renyi(3, 1.0, 1), k3.vertices.labels()));

    cfg.cutoff = 3;
    const auto [c5, c5_metrics] =
        decompose_and_solve(cycle(5), Problem::MinVertexCover, cfg, exact);
    CHECK(c5.value == 3);
    CHECK(oracle::check_cover(cycle(5), c5.vertices.labels()));

    const auto [none, none_metrics] =
        decompose_and_solve(Graph::from_edges(0, {}), Problem::MaxClique, cfg, exact);
    CHECK(none.value == 0);
    CHECK(none.vertices.empty());
    CHECK(none_metrics.leaf_count <= 1);
}

TEST_CASE("objectives match the oracles across strategies and cutoffs") {
    LeafSolver exact;
    for (int i = 0; i < 25; ++i) {
        const Graph g =
            Graph::erdos_renyi(6 + i % 9, 0.1 + 0.1 * (i % 9), derive_seed(90, i));
        const int omega = oracle::oracle_clique_number(g);
        const int mvc = oracle::oracle_mvc_size(g);
        for (Selection sel : {Selection::LowDegree, Selection::MedianDegree,
                              Selection::HighDegree, Selection::Random}) {
            EngineConfig cfg;
            cfg.cutoff = 4;
            cfg.selection = sel;
            cfg.seed = derive_seed(91, i);
            const auto [mc_sol, m1] = decompose_and_solve(g, Problem::MaxClique, cfg, exact);
            CHECK(mc_sol.value == omega);
            CHECK(oracle::check_clique(g, mc_sol.vertices.labels()));
            const auto [vc_sol, m2] = decompose_and_solve(g, Problem::MinVertexCover, cfg, exact);
            CHECK(vc_sol.value == mvc);
            CHECK(oracle::check_cover(g, vc_sol.vertices.labels()));
        }
    }
}

TEST_CASE("bounds and reductions never change the objective") {
    LeafSolver exact;
    for (int i = 0; i < 12; ++i) {
        const Graph g = Graph::erdos_renyi(14, 0.2 + 0.05 * i, derive_seed(92, i));
        EngineConfig base;
        base.cutoff = 4;
        base.bounds = BoundFamily::None;
        base.seed = 7;
        const int mc_ref =
            decompose_and_solve(g, Problem::MaxClique, base, exact).first.value;
        const int vc_ref =
            decompose_and_solve(g, Problem::MinVertexCover, base, exact).first.value;

        for (BoundFamily family : {BoundFamily::Chromatic, BoundFamily::Deterministic,
                                   BoundFamily::Both}) {
            EngineConfig cfg = base;
            cfg.bounds = family;
            CHECK(decompose_and_solve(g, Problem::MaxClique, cfg, exact).first.value == mc_ref);
            CHECK(decompose_and_solve(g, Problem::MinVertexCover, cfg, exact).first.value ==
                  vc_ref);
        }
        for (std::set<Reduction> reds :
             {std::set<Reduction>{Reduction::KCore}, std::set<Reduction>{Reduction::EdgeKCore},
              std::set<Reduction>{Reduction::Persistency}}) {
            EngineConfig cfg = base;
            cfg.bounds = BoundFamily::Chromatic;
            cfg.reductions = reds;
            CHECK(decompose_and_solve(g, Problem::MaxClique, cfg, exact).first.value == mc_ref);
        }
        for (std::set<Reduction> reds :
             {std::set<Reduction>{Reduction::Nbvr}, std::set<Reduction>{Reduction::Persistency}}) {
            EngineConfig cfg = base;
            cfg.bounds = BoundFamily::Chromatic;
            cfg.reductions = reds;
            CHECK(decompose_and_solve(g, Problem::MinVertexCover, cfg, exact).first.value ==
                  vc_ref);
        }
    }
}

TEST_CASE("incumbent source decomposition still reaches the optimum") {
    LeafSolver exact;
    for (int i = 0; i < 10; ++i) {
        const Graph g = Graph::erdos_renyi(13, 0.25 + 0.05 * i, derive_seed(93, i));
        EngineConfig cfg;
        cfg.cutoff = 4;
        cfg.incumbent_source = IncumbentSource::Decomposition;
        CHECK(decompose_and_solve(g, Problem::MaxClique, cfg, exact).first.value ==
              oracle::oracle_clique_number(g));
        CHECK(decompose_and_solve(g, Problem::MinVertexCover, cfg, exact).first.value ==
              oracle::oracle_mvc_size(g));
    }
}

TEST_CASE("unpruned tree size obeys the exhaustive bound") {
    EngineConfig cfg;
    cfg.cutoff = 4;
    cfg.bounds = BoundFamily::None;
    LeafSolver exact;
    const Graph g = Graph::erdos_renyi(12, 0.5, 1234);
    const auto [sol, metrics] = decompose_and_solve(g, Problem::MaxClique, cfg, exact);
    CHECK(metrics.leaf_count <= (1L << (12 - 4 + 1)));
    CHECK(metrics.pruned_count == 0);
}

TEST_CASE("complementarity holds end to end") {
    LeafSolver exact;
    EngineConfig cfg;
    cfg.cutoff = 4;
    for (int i = 0; i < 8; ++i) {
        const Graph g = Graph::erdos_renyi(12, 0.2 + 0.08 * i, derive_seed(94, i));
        const int mvc =
            decompose_and_solve(g, Problem::MinVertexCover, cfg, exact).first.value;
        const int omega_co =
            decompose_and_solve(g.complement(), Problem::MaxClique, cfg, exact).first.value;
        CHECK(mvc + omega_co == g.vertex_count());
    }
}

TEST_CASE("worker pool returns the same objective") {
    LeafSolver exact;
    for (int i = 0; i < 6; ++i) {
        const Graph g = Graph::erdos_renyi(16, 0.35, derive_seed(95, i));
        EngineConfig serial;
        serial.cutoff = 4;
        EngineConfig parallel = serial;
        parallel.workers = 4;
        CHECK(decompose_and_solve(g, Problem::MaxClique, parallel, exact).first.value ==
              decompose_and_solve(g, Problem::MaxClique, serial, exact).first.value);
        CHECK(decompose_and_solve(g, Problem::MinVertexCover, parallel, exact).first.value ==
              decompose_and_solve(g, Problem::MinVertexCover, serial, exact).first.value);
    }
}

TEST_CASE("engine leaf count matches the solver-side counter") {
    LeafSolver exact;
    exact.invocations = std::make_shared<std::atomic<long>>(0);
    EngineConfig cfg;
    cfg.cutoff = 4;
    // decomposition mode has no threshold before the first leaf, so at
    // least one leaf is always solved
    cfg.incumbent_source = IncumbentSource::Decomposition;
    const Graph g = Graph::erdos_renyi(14, 0.4, 4242);
    const auto [sol, metrics] = decompose_and_solve(g, Problem::MaxClique, cfg, exact);
    CHECK(metrics.leaf_count == exact.invocations->load());
    CHECK(metrics.leaf_count >= 1);
}

TEST_CASE("metrics are identical across repeated single-worker runs") {
    LeafSolver exact;
    EngineConfig cfg;
    cfg.cutoff = 4;
    cfg.selection = Selection::Random;
    cfg.seed = 31337;
    const Graph g = Graph::erdos_renyi(15, 0.4, 88);
    const auto [s1, m1] = decompose_and_solve(g, Problem::MaxClique, cfg, exact);
    const auto [s2, m2] = decompose_and_solve(g, Problem::MaxClique, cfg, exact);
    CHECK(s1.vertices == s2.vertices);
    CHECK(m1.leaf_count == m2.leaf_count);
    CHECK(m1.pruned_count == m2.pruned_count);
}

TEST_CASE("leaf failures carry the subproblem identifier") {
    LeafSolver exact;
    EngineConfig cfg;
    cfg.cutoff = 70; // leaves larger than the exact-solver limit
    const Graph g = Graph::erdos_renyi(70, 0.05, 5);
    CHECK_THROWS_WITH_AS(decompose_and_solve(g, Problem::MaxClique, cfg, exact),
                         doctest::Contains("leaf subproblem"), LimitError);

    // the failure also surfaces through the worker pool: dense enough that
    // oversized leaves appear inside spawned subtrees
    cfg.workers = 4;
    const Graph dense = Graph::erdos_renyi(80, 0.9, 6);
    CHECK_THROWS_AS(decompose_and_solve(dense, Problem::MaxClique, cfg, exact), LimitError);
}

TEST_CASE("traversal orders agree on the objective") {
    LeafSolver exact;
    const Graph g = Graph::erdos_renyi(14, 0.45, 77);
    int reference = -1;
    for (Traversal t : {Traversal::PlusFirst, Traversal::MinusFirst, Traversal::SmallerFirst}) {
        EngineConfig cfg;
        cfg.cutoff = 4;
        cfg.traversal = t;
        const int value = decompose_and_solve(g, Problem::MaxClique, cfg, exact).first.value;
        if (reference < 0) reference = value;
        CHECK(value == reference);
    }
}

TEST_CASE("annealed leaves stay feasible end to end") {
    LeafSolver anneal;
    anneal.kind = LeafSolver::Kind::Anneal;
    anneal.anneal.num_reads = 20;
    anneal.anneal.sweeps = 50;
    anneal.seed = 11;
    EngineConfig cfg;
    cfg.cutoff = 6;
    for (int i = 0; i < 6; ++i) {
        const Graph g = Graph::erdos_renyi(14, 0.3 + 0.06 * i, derive_seed(96, i));
        const auto [mc_sol, m1] = decompose_and_solve(g, Problem::MaxClique, cfg, anneal);
        CHECK(oracle::check_clique(g, mc_sol.vertices.labels()));
        CHECK(mc_sol.value <= oracle::oracle_clique_number(g));
        const auto [vc_sol, m2] = decompose_and_solve(g, Problem::MinVertexCover, cfg, anneal);
        CHECK(oracle::check_cover(g, vc_sol.vertices.labels()));
        CHECK(vc_sol.value >= oracle::oracle_mvc_size(g));
    }
}

TEST_CASE("annealed runs are reproducible with a single worker") {
    LeafSolver anneal;
    anneal.kind = LeafSolver::Kind::Anneal;
    anneal.anneal.num_reads = 10;
    anneal.anneal.sweeps = 40;
    anneal.seed = 21;
    EngineConfig cfg;
    cfg.cutoff = 6;
    cfg.seed = 21;
    cfg.selection = Selection::Random;
    const Graph g = Graph::erdos_renyi(18, 0.4, 909);
    const auto [s1, m1] = decompose_and_solve(g, Problem::MinVertexCover, cfg, anneal);
    const auto [s2, m2] = decompose_and_solve(g, Problem::MinVertexCover, cfg, anneal);
    CHECK(s1.value == s2.value);
    CHECK(s1.vertices == s2.vertices);
    CHECK(m1.leaf_count == m2.leaf_count);
}

TEST_CASE("cutoff validation") {
    EngineConfig cfg;
    cfg.cutoff = 0;
    LeafSolver exact;
    CHECK_THROWS_AS(decompose_and_solve(cycle(3), Problem::MaxClique, cfg, exact),
                    std::invalid_argument);
}

} // TEST_SUITE
