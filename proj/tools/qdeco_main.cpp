// qdeco: exact decomposition solver for maximum clique and minimum vertex
// cover with a simulated-annealing QUBO backend for leaf subproblems.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdeco/errors.hpp"
#include "qdeco/experiment.hpp"
#include "qdeco/graph_io.hpp"
#include "qdeco/names.hpp"
#include "qdeco/qubo.hpp"
#include "qdeco/report.hpp"

using namespace qdeco;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitLimit = 4;

std::vector<int> parse_int_range(const std::string& text) {
    int a = 0, b = 0, step = 0;
    const int fields = std::sscanf(text.c_str(), "%d:%d:%d", &a, &b, &step);
    if (fields <= 0) throw std::invalid_argument("bad range '" + text + "'");
    if (fields == 1) return {a};
    if (fields == 2) step = 1;
    if (step <= 0 || b < a) throw std::invalid_argument("bad range '" + text + "'");
    std::vector<int> out;
    for (int v = a; v <= b; v += step) out.push_back(v);
    return out;
}

std::vector<double> parse_double_range(const std::string& text) {
    double a = 0, b = 0, step = 0;
    const int fields = std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &step);
    if (fields <= 0) throw std::invalid_argument("bad range '" + text + "'");
    if (fields == 1) return {a};
    if (fields == 2) step = (b - a);
    if (step <= 0 || b < a) throw std::invalid_argument("bad range '" + text + "'");
    std::vector<double> out;
    const int count = static_cast<int>(std::llround((b - a) / step));
    for (int i = 0; i <= count; ++i) out.push_back(a + i * step);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

void check_reduction_pairing(Problem problem, const std::set<Reduction>& reductions) {
    for (Reduction r : reductions) {
        const bool clique_only = r == Reduction::KCore || r == Reduction::EdgeKCore;
        const bool cover_only = r == Reduction::Nbvr;
        if (clique_only && problem != Problem::MaxClique)
            throw std::invalid_argument("reduction '" + to_string(r) + "' applies to mc only");
        if (cover_only && problem != Problem::MinVertexCover)
            throw std::invalid_argument("reduction '" + to_string(r) + "' applies to mvc only");
    }
}

struct SolveOptions {
    std::string input;
    std::string format = "dimacs";
    std::string problem;
    std::string preset;
    int cutoff = 64;
    std::string select;
    std::string bounds;
    std::string lower_bound;
    std::string reductions;
    std::string solver = "exact";
    int reads = 100;
    int sweeps = 200;
    std::uint64_t seed = 0;
    int workers = 1;
    double anneal_seconds = 1.6;
    std::string dump_qubo;
    std::string output = "json";
};

int run_solve(const SolveOptions& opt, const CLI::App& cmd) {
    Problem problem = Problem::MaxClique;
    EngineConfig cfg;
    if (!opt.preset.empty()) {
        Preset preset;
        if (opt.preset == "dbk") preset = dbk_preset();
        else if (opt.preset == "dbr") preset = dbr_preset();
        else throw std::invalid_argument("unknown preset '" + opt.preset + "'");
        problem = preset.problem;
        cfg = preset.config;
    } else if (opt.problem.empty()) {
        throw std::invalid_argument("either --problem or --preset is required");
    }
    if (cmd.count("--problem")) problem = parse_problem(opt.problem);
    if (cmd.count("--select")) cfg.selection = parse_selection(opt.select);
    if (cmd.count("--bounds")) cfg.bounds = parse_bound_family(opt.bounds);
    if (cmd.count("--lower-bound"))
        cfg.incumbent_source = parse_incumbent_source(opt.lower_bound);
    if (cmd.count("--reductions")) cfg.reductions = parse_reductions(opt.reductions);
    cfg.cutoff = opt.cutoff;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    check_reduction_pairing(problem, cfg.reductions);

    LeafSolver leaf;
    leaf.kind = parse_solver_kind(opt.solver);
    leaf.anneal.num_reads = opt.reads;
    leaf.anneal.sweeps = opt.sweeps;
    leaf.seed = opt.seed;

    const GraphFormat format =
        opt.format == "dimacs" ? GraphFormat::Dimacs : GraphFormat::EdgeList;
    const Graph g = read_graph_file(opt.input, format);

    if (!opt.dump_qubo.empty()) {
        const Qubo q =
            problem == Problem::MaxClique ? build_mc_qubo(g) : build_mvc_qubo(g);
        std::ofstream out(opt.dump_qubo);
        if (!out) throw std::runtime_error("cannot write '" + opt.dump_qubo + "'");
        out << to_text(q);
    }

    auto [solution, metrics] = decompose_and_solve(g, problem, cfg, leaf);
    metrics.predicted_seconds =
        predicted_time(metrics.leaf_count, metrics.preprocessing_seconds, opt.anneal_seconds);

    if (opt.output == "csv") {
        ExperimentRecord rec;
        rec.n = g.vertex_count();
        const long pairs = static_cast<long>(g.vertex_count()) * (g.vertex_count() - 1) / 2;
        rec.density = pairs > 0 ? static_cast<double>(g.edge_count()) / pairs : 0.0;
        rec.seed = cfg.seed;
        rec.problem = problem;
        rec.strategy = cfg.selection;
        rec.bounds = cfg.bounds;
        rec.incumbent_source = cfg.incumbent_source;
        rec.reductions = cfg.reductions;
        rec.cutoff = cfg.cutoff;
        rec.objective = solution.value;
        rec.leaf_count = metrics.leaf_count;
        rec.preprocessing_seconds = metrics.preprocessing_seconds;
        rec.predicted_seconds = metrics.predicted_seconds;
        std::cout << experiment_csv_header() << "\n" << to_csv_row(rec) << "\n";
    } else if (opt.output == "json") {
        std::cout << result_document_json(opt.input, problem, g, solution, metrics, cfg, leaf,
                                          opt.anneal_seconds)
                  << "\n";
    } else {
        throw std::invalid_argument("unknown output format '" + opt.output + "'");
    }
    return 0;
}

int run_generate(int n, double p, std::uint64_t seed, const std::string& out_path) {
    const Graph g = Graph::erdos_renyi(n, p, seed);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    write_edge_list(out, g);
    return 0;
}

struct ExperimentOptions {
    std::string n_range;
    std::string density_range = "0.1:0.9:0.1";
    int trials = 1;
    std::string cutoffs = "64";
    std::string preset = "dbk";
    std::uint64_t seed = 0;
    double anneal_seconds = 1.6;
    std::string out;
};

int run_experiment_cmd(const ExperimentOptions& opt) {
    ExperimentGrid grid;
    grid.sizes = parse_int_range(opt.n_range);
    grid.densities = parse_double_range(opt.density_range);
    grid.cutoffs = parse_int_list(opt.cutoffs);
    grid.trials = opt.trials;
    Preset preset;
    if (opt.preset == "dbk") preset = dbk_preset();
    else if (opt.preset == "dbr") preset = dbr_preset();
    else throw std::invalid_argument("unknown preset '" + opt.preset + "'");
    grid.problem = preset.problem;
    grid.base = preset.config;
    grid.master_seed = opt.seed;
    grid.anneal_seconds = opt.anneal_seconds;

    const auto records = run_experiment(grid);
    if (opt.out.empty()) {
        write_experiment_csv(std::cout, records);
    } else {
        std::ofstream out(opt.out);
        if (!out) throw std::runtime_error("cannot write '" + opt.out + "'");
        write_experiment_csv(out, records);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition solver for maximum clique / minimum vertex cover"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "solve one graph instance");
    solve->add_option("--input", solve_opt.input, "graph file")->required();
    solve->add_option("--format", solve_opt.format, "input format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    solve->add_option("--problem", solve_opt.problem, "mc or mvc");
    solve->add_option("--preset", solve_opt.preset, "dbk or dbr")
        ->check(CLI::IsMember({"dbk", "dbr"}));
    solve->add_option("--cutoff", solve_opt.cutoff, "leaf size threshold")
        ->check(CLI::PositiveNumber);
    solve->add_option("--select", solve_opt.select, "low|median|high|random");
    solve->add_option("--bounds", solve_opt.bounds, "chromatic|deterministic|both|none");
    solve->add_option("--lower-bound", solve_opt.lower_bound, "heuristic|decomposition");
    solve->add_option("--reductions", solve_opt.reductions,
                      "comma list of kcore,edge-kcore,persistency,nbvr or none");
    solve->add_option("--solver", solve_opt.solver, "exact|anneal");
    solve->add_option("--reads", solve_opt.reads, "annealing reads")->check(CLI::PositiveNumber);
    solve->add_option("--sweeps", solve_opt.sweeps, "sweeps per read")
        ->check(CLI::PositiveNumber);
    solve->add_option("--seed", solve_opt.seed, "run seed");
    solve->add_option("--workers", solve_opt.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    solve->add_option("--anneal-seconds", solve_opt.anneal_seconds,
                      "per-leaf annealer wall time used in predictions");
    solve->add_option("--dump-qubo", solve_opt.dump_qubo, "write the instance QUBO here");
    solve->add_option("--output", solve_opt.output, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App* generate = app.add_subcommand("generate", "write a seeded G(n,p) edge list");
    generate->add_option("--n", gen_n, "vertex count")->required()
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--p", gen_p, "edge probability")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", gen_seed, "generator seed");
    generate->add_option("--out", gen_out, "output path")->required();

    ExperimentOptions exp_opt;
    CLI::App* experiment = app.add_subcommand("experiment", "run a seeded parameter sweep");
    experiment->add_option("--n-range", exp_opt.n_range, "sizes as a or a:b or a:b:step")
        ->required();
    experiment->add_option("--density-range", exp_opt.density_range, "densities as a:b:step");
    experiment->add_option("--trials", exp_opt.trials, "trials per grid point")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--cutoffs", exp_opt.cutoffs, "comma list of leaf cutoffs");
    experiment->add_option("--preset", exp_opt.preset, "dbk or dbr")
        ->check(CLI::IsMember({"dbk", "dbr"}));
    experiment->add_option("--seed", exp_opt.seed, "master seed");
    experiment->add_option("--anneal-seconds", exp_opt.anneal_seconds,
                           "per-leaf annealer wall time used in predictions");
    experiment->add_option("--out", exp_opt.out, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(solve_opt, *solve);
        if (generate->parsed()) return run_generate(gen_n, gen_p, gen_seed, gen_out);
        if (experiment->parsed()) return run_experiment_cmd(exp_opt);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const LimitError& e) {
        std::cerr << "limit error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
