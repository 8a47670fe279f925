#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicontract/coloring.hpp"
#include "bicontract/error.hpp"
#include "bicontract/generators.hpp"
#include "bicontract/graph_io.hpp"
#include "bicontract/oracle.hpp"
#include "bicontract/pipeline.hpp"
#include "bicontract/separators.hpp"
#include "bicontract/treewidth.hpp"

using namespace bicontract;

namespace {

enum Exit : int { yes = 0, no = 1, input_error = 2, resource_error = 3, internal_error = 4 };

struct Options {
    std::string format = "plain";
    std::size_t k = 0;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::optional<std::int64_t> width_bound;
    std::optional<std::int64_t> wc_size;
    std::optional<std::size_t> cut_budget;
    std::string policy = "verified";
    std::uint64_t work_limit = default_work_limit;

    bool structured() const { return format == "structured"; }

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.width_bound = width_bound;
        cfg.wellconnected_size = wc_size;
        cfg.cut_budget = cut_budget;
        cfg.policy = parse_policy(policy);
        cfg.work_limit = work_limit;
        cfg.seed = seed;
        cfg.threads = threads;
        return cfg;
    }
};

void add_solver_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--threads", o.threads, "Worker threads for the partition loop")->check(CLI::Range(1u, 256u));
    cmd->add_option("--width-bound", o.width_bound, "Override the treewidth bound w");
    cmd->add_option("--wc-size", o.wc_size, "Override the well-connected set size h");
    cmd->add_option("--cut-budget", o.cut_budget, "Override the important-set cut budget p");
    cmd->add_option("--irrelevant-policy", o.policy, "paper-exact-only | verified | disabled");
}

void print_answer(const Options& o, const Graph& g, const std::optional<ContractionSet>& s,
                  const std::vector<PhaseRecord>& diagnostics) {
    if (o.structured()) {
        std::cout << "type=result answer=" << (s ? "yes" : "no") << " k=" << o.k << " n=" << g.num_vertices()
                  << " m=" << g.num_edges();
        if (s) std::cout << " size=" << s->size();
        std::cout << '\n';
        if (s) {
            for (const auto& e : s->edges()) std::cout << "type=edge u=" << e.u << " v=" << e.v << '\n';
            for (auto [v, c] : contraction_set_to_coloring(g, s->edges()).to_map())
                std::cout << "type=color vertex=" << v << " color=" << c << '\n';
        }
        for (const auto& d : diagnostics) std::cout << "type=diagnostic " << d.to_line() << '\n';
        return;
    }
    if (!s) {
        std::cout << "NO\n";
        return;
    }
    std::cout << "YES " << s->size() << '\n' << serialize_edge_list(s->edges());
    for (auto [v, c] : contraction_set_to_coloring(g, s->edges()).to_map())
        std::cout << "c color " << v << ' ' << c << '\n';
}

int cmd_solve(const std::string& path, const Options& o) {
    auto file = read_graph_file(path);
    auto cfg = o.config();
    std::vector<PhaseRecord> diagnostics;
    if (o.structured()) cfg.diagnostics = [&](const PhaseRecord& r) { diagnostics.push_back(r); };
    auto s = solve_bipartite_contraction(file.graph, o.k, cfg);
    print_answer(o, file.graph, s, diagnostics);
    return s ? yes : no;
}

int cmd_oracle(const std::string& path, const Options& o) {
    auto file = read_graph_file(path);
    auto s = brute_force_contraction(file.graph, o.k, o.work_limit);
    print_answer(o, file.graph, s, {});
    return s ? yes : no;
}

int cmd_verify(const std::string& graph_path, const std::string& witness_path, const Options& o) {
    auto file = read_graph_file(graph_path);
    auto witness = parse_edge_list(read_text_file(witness_path));
    auto check = check_witness(file.graph, witness, o.k);
    if (o.structured()) {
        std::cout << "type=verify accepted=" << (check.accepted ? "yes" : "no") << " size=" << witness.size()
                  << " k=" << o.k;
        if (!check.accepted) std::cout << " reason=\"" << check.reason << '"';
        std::cout << '\n';
    } else if (check.accepted) {
        std::cout << "ACCEPT\n";
    } else {
        std::cout << "REJECT " << check.reason << '\n';
    }
    return check.accepted ? yes : no;
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed) {
    auto arg = [&](std::size_t i) -> const std::string& {
        if (i >= params.size()) fail(Errc::invalid_argument, "gen " + kind + " needs more parameters");
        return params[i];
    };
    auto integer = [&](std::size_t i) { return std::stoi(arg(i)); };
    auto real = [&](std::size_t i) { return std::stod(arg(i)); };
    Graph g;
    if (kind == "cycle") g = gen_cycle(integer(0));
    else if (kind == "path") g = gen_path(integer(0));
    else if (kind == "complete") g = gen_complete(integer(0));
    else if (kind == "bipartite") g = gen_complete_bipartite(integer(0), integer(1));
    else if (kind == "star") g = gen_star(integer(0));
    else if (kind == "grid") g = gen_grid(integer(0), integer(1));
    else if (kind == "petersen") g = gen_petersen();
    else if (kind == "random") g = gen_random(integer(0), real(1), seed);
    else if (kind == "random-bipartite") g = gen_random_bipartite(integer(0), real(1), seed);
    else if (kind == "reduce") {
        auto file = read_graph_file(arg(0));
        auto k = static_cast<std::size_t>(std::stoul(arg(1)));
        auto reduced = reduce_edge_bipartization(file.graph, k);
        std::cout << "c edge bipartization with k=" << k << " as bipartite contraction with k=" << reduced.k << '\n'
                  << serialize_graph(reduced.graph);
        return yes;
    } else {
        fail(Errc::invalid_argument, "unknown generator '" + kind + "'");
    }
    std::cout << serialize_graph(g);
    return yes;
}

int cmd_tw(const std::string& path, const std::string& strategy) {
    auto file = read_graph_file(path);
    EliminationStrategy s;
    if (strategy == "min-degree") s = EliminationStrategy::min_degree;
    else if (strategy == "min-fill") s = EliminationStrategy::min_fill;
    else fail(Errc::invalid_argument, "unknown strategy '" + strategy + "'");
    auto td = heuristic_decomposition(file.graph, s);
    std::cout << "c width " << td.width() << '\n' << serialize_pace(td, file.graph);
    return yes;
}

int cmd_impsep(const std::string& path, Vertex x, Vertex y, std::size_t p, const Options& o) {
    auto file = read_graph_file(path);
    ImportantSetStats stats;
    auto sets = enumerate_important_sets(file.graph, x, y, p, &stats, o.work_limit);
    for (const auto& s : sets) {
        if (o.structured()) {
            std::cout << "type=important-set boundary=" << s.boundary << " members=";
            for (std::size_t i = 0; i < s.members.size(); ++i) std::cout << (i ? "," : "") << s.members[i];
            std::cout << '\n';
        } else {
            std::cout << "set " << s.boundary << ':';
            for (auto v : s.members) std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    if (o.structured())
        std::cout << "type=summary sets=" << sets.size() << " branch_nodes=" << stats.branch_nodes << '\n';
    else
        std::cout << "c " << sets.size() << " sets\n";
    return yes;
}

struct BenchInstance {
    std::string name;
    Graph graph;
    std::size_t k;
};

std::vector<BenchInstance> smoke_suite(std::uint64_t seed) {
    std::vector<BenchInstance> out{
        {"c5", gen_cycle(5), 1},
        {"k4", gen_complete(4), 1},
        {"k4", gen_complete(4), 2},
        {"petersen", gen_petersen(), 3},
        {"grid3x4", gen_grid(3, 4), 0},
        {"k33", gen_complete_bipartite(3, 3), 0},
    };
    for (int i = 0; i < 8; ++i) {
        int n = 7 + i % 4;
        out.push_back({"random" + std::to_string(i), gen_random(n, 0.3, seed + i), static_cast<std::size_t>(i % 4)});
    }
    return out;
}

int cmd_bench(const std::string& suite, double budget_seconds, const Options& o) {
    if (suite != "smoke") fail(Errc::invalid_argument, "unknown suite '" + suite + "'");
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto cfg = o.config();
    std::vector<PhaseRecord> diagnostics;
    cfg.diagnostics = [&](const PhaseRecord& r) { diagnostics.push_back(r); };
    for (const auto& inst : smoke_suite(o.seed)) {
        diagnostics.clear();
        const auto t0 = clock::now();
        SolveStats stats;
        auto s = solve_bipartite_contraction(inst.graph, inst.k, cfg, &stats);
        const auto ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        std::cout << "type=instance name=" << inst.name << " n=" << inst.graph.num_vertices()
                  << " m=" << inst.graph.num_edges() << " k=" << inst.k << " answer=" << (s ? "yes" : "no")
                  << " ms=" << ms << " cheaper_calls=" << stats.cheaper_calls << " dp_runs=" << stats.dp_runs
                  << " deletions=" << stats.deletions.size() << '\n';
        for (const auto& d : diagnostics) std::cout << "type=diagnostic instance=" << inst.name << ' ' << d.to_line() << '\n';
    }
    const auto total = std::chrono::duration<double>(clock::now() - start).count();
    const bool within = total <= budget_seconds;
    std::cout << "type=suite name=" << suite << " seconds=" << total << " budget=" << budget_seconds
              << " within_budget=" << (within ? "yes" : "no") << '\n';
    return within ? yes : resource_error;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite Contraction solver and tools"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "plain | structured")->check(CLI::IsMember({"plain", "structured"}));
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--work-limit", o.work_limit, "Step limit for exhaustive searches and the DP");

    std::string graph_path;
    std::string witness_path;

    auto* solve = app.add_subcommand("solve", "Decide and witness Bipartite Contraction");
    solve->add_option("graph", graph_path, "Graph file")->required();
    solve->add_option("--k", o.k, "Contraction budget")->required();
    add_solver_flags(solve, o);

    auto* verify = app.add_subcommand("verify", "Check a witness contraction set");
    verify->add_option("graph", graph_path, "Graph file")->required();
    verify->add_option("witness", witness_path, "Witness edge list")->required();
    verify->add_option("--k", o.k, "Contraction budget")->required();

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search for a contraction set");
    oracle->add_option("graph", graph_path, "Graph file")->required();
    oracle->add_option("--k", o.k, "Contraction budget")->required();

    std::string kind;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("gen", "Generate a graph file");
    gen->add_option("kind", kind,
                    "cycle N | path N | complete N | bipartite A B | star L | grid R C | petersen | "
                    "random N P | random-bipartite N P | reduce FILE K")
        ->required();
    gen->add_option("params", params, "Generator parameters");

    std::string strategy = "min-fill";
    auto* tw = app.add_subcommand("tw", "Heuristic tree decomposition in PACE format");
    tw->add_option("graph", graph_path, "Graph file")->required();
    tw->add_option("--strategy", strategy, "min-degree | min-fill");

    Vertex x = 0;
    Vertex y = 0;
    std::size_t p = 0;
    auto* impsep = app.add_subcommand("impsep", "List (x, y)-important sets");
    impsep->add_option("graph", graph_path, "Graph file")->required();
    impsep->add_option("x", x, "Source vertex")->required();
    impsep->add_option("y", y, "Sink vertex")->required();
    impsep->add_option("p", p, "Boundary bound")->required();

    std::string suite = "smoke";
    double budget = 60.0;
    auto* bench = app.add_subcommand("bench", "Run a timed instance suite");
    bench->add_option("suite", suite, "Suite name (smoke)");
    bench->add_option("--time-budget", budget, "Seconds the suite may take");
    add_solver_flags(bench, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? yes : input_error;
    }

    try {
        if (*solve) return cmd_solve(graph_path, o);
        if (*verify) return cmd_verify(graph_path, witness_path, o);
        if (*oracle) return cmd_oracle(graph_path, o);
        if (*gen) return cmd_gen(kind, params, o.seed);
        if (*tw) return cmd_tw(graph_path, strategy);
        if (*impsep) return cmd_impsep(graph_path, x, y, p, o);
        if (*bench) return cmd_bench(suite, budget, o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
            case Errc::budget_exceeded:
                return resource_error;
            case Errc::parse_error:
            case Errc::invalid_argument:
            case Errc::invalid_edge:
            case Errc::invalid_vertex:
            case Errc::invalid_coloring:
            case Errc::invalid_terminals:
                return input_error;
            default:
                return internal_error;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad number: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return internal_error;
}
