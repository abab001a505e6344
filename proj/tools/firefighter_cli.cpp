// Command-line front end: solve, verify, generate, bench.

#include <glob.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "firefighter/commands.hpp"

using namespace firefighter;

namespace {

std::vector<std::string> expand_globs(const std::vector<std::string>& patterns) {
    std::vector<std::string> out;
    for (const auto& pattern : patterns) {
        glob_t g{};
        if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
            for (std::size_t i = 0; i < g.gl_pathc; ++i) {
                out.emplace_back(g.gl_pathv[i]);
            }
        } else {
            out.push_back(pattern);  // let the reader report it
        }
        globfree(&g);
    }
    return out;
}

void emit(const RunReport& r, bool machine) {
    if (machine) {
        r.print_machine(std::cout);
    } else {
        r.print_text(std::cout);
    }
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        auto k = std::stoll(text);
        return {k, k};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Firefighter problem solvers, strategy checker and instance generators"};
    app.require_subcommand(1);

    bool machine = false;
    std::int32_t oracle_limit = kDefaultOracleLimit;
    std::optional<std::int64_t> k_opt, target_opt;
    std::string problem_name = "all-but-k", solver_name = "auto", out_path;

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one instance");
    std::string instance_path;
    solve->add_option("instance", instance_path, "Instance file")->required();
    solve->add_option("--problem", problem_name, "max-protection | saving-k | all-but-k | exact-tree");
    solve->add_option("--solver", solver_name, "auto | tree | general | oracle");
    solve->add_option("--k", k_opt, "Override the instance's k");
    solve->add_option("--K", target_opt, "Override the instance's target K");
    solve->add_option("--oracle-limit", oracle_limit, "Vertex limit for exhaustive oracles");
    solve->add_option("--out", out_path, "Write the witness strategy here");
    solve->add_flag("--machine", machine, "Emit one JSON record");

    // verify
    auto* verify = app.add_subcommand("verify", "Replay a strategy file on an instance");
    std::string strategy_path;
    verify->add_option("instance", instance_path, "Instance file")->required();
    verify->add_option("strategy", strategy_path, "Strategy file")->required();
    verify->add_flag("--machine", machine, "Emit one JSON record");

    // generate
    auto* generate = app.add_subcommand("generate", "Generate an instance");
    std::string kind_name;
    std::vector<std::string> inputs;
    std::int32_t n = 0, max_degree = 3;
    std::uint64_t seed = 0;
    generate->add_option("kind", kind_name, "clique-saving | clique-protection | cross-compose | random-tree")->required();
    generate->add_option("inputs", inputs, "Input instance files (graph for clique-*, trees for cross-compose)");
    generate->add_option("--k", k_opt, "Clique size / shared parameter / k recorded in the output");
    generate->add_option("--K", target_opt, "Target K (cross-compose protection variant)");
    generate->add_option("--n", n, "Vertex count (random-tree)");
    generate->add_option("--max-degree", max_degree, "Degree cap (random-tree)");
    generate->add_option("--seed", seed, "RNG seed (random-tree)");
    generate->add_option("--out", out_path, "Output instance file (stdout when omitted)");

    // bench
    auto* bench = app.add_subcommand("bench", "Time a solver over a suite");
    std::vector<std::string> suite;
    int repeats = 3;
    std::string k_range;
    bench->add_option("suite", suite, "Instance files or glob patterns")->required();
    bench->add_option("--problem", problem_name, "Problem");
    bench->add_option("--solver", solver_name, "Solver");
    bench->add_option("--repeats", repeats, "Runs per instance (median reported)");
    bench->add_option("--k", k_opt, "Override k for every instance");
    bench->add_option("--k-range", k_range, "Run every instance for each k in first:last");
    bench->add_option("--oracle-limit", oracle_limit, "Vertex limit for exhaustive oracles");
    bench->add_option("--out", out_path, "Write the CSV table here (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    if (oracle_limit > kDefaultOracleLimit) {
        std::cerr << "warning: oracle size guard raised to " << oracle_limit
                  << " vertices; exhaustive search may take very long\n";
    }

    try {
        if (*solve) {
            SolveOptions opts;
            opts.problem = parse_problem(problem_name);
            opts.solver = parse_solver(solver_name);
            opts.k = k_opt;
            opts.target = target_opt;
            opts.oracle_limit = oracle_limit;
            RunReport r;
            try {
                r = cmd_solve(read_instance_file(instance_path), opts);
            } catch (const std::exception& e) {
                r.command = "solve";
                r.message = e.what();
                r.exit_status = kExitError;
            }
            emit(r, machine);
            if (!out_path.empty() && r.exit_status != kExitError) {
                std::ofstream out(out_path);
                std::visit(
                    [&](const auto& w) {
                        if constexpr (!std::is_same_v<std::decay_t<decltype(w)>, std::monostate>) {
                            write_strategy(out, w);
                        }
                    },
                    r.witness);
            }
            return r.exit_status;
        }
        if (*verify) {
            RunReport r;
            try {
                r = cmd_verify(read_instance_file(instance_path), read_strategy_file(strategy_path));
            } catch (const std::exception& e) {
                r.command = "verify";
                r.message = e.what();
                r.exit_status = kExitError;
            }
            emit(r, machine);
            return r.exit_status;
        }
        if (*generate) {
            GenerateRequest req;
            req.kind = parse_generate_kind(kind_name);
            for (const auto& path : inputs) {
                req.inputs.push_back(read_instance_file(path));
            }
            if (k_opt) {
                req.k = *k_opt;
                if (req.kind == GenerateKind::CrossCompose) {
                    for (auto& in : req.inputs) {
                        in.k = *k_opt;
                    }
                }
            }
            req.target = target_opt;
            req.n = n;
            req.max_degree = max_degree;
            req.seed = seed;
            InstanceBundle inst = cmd_generate(req);
            if (out_path.empty()) {
                write_instance(std::cout, inst);
            } else {
                write_instance_file(out_path, inst);
                std::cout << "wrote " << out_path << " n=" << inst.graph.vertex_count() << " m=" << inst.graph.edge_count()
                          << " k=" << inst.k;
                if (inst.target) {
                    std::cout << " K=" << *inst.target;
                }
                std::cout << '\n';
            }
            return kExitYes;
        }
        if (*bench) {
            BenchOptions opts;
            opts.solve.problem = parse_problem(problem_name);
            opts.solve.solver = parse_solver(solver_name);
            opts.solve.k = k_opt;
            opts.solve.oracle_limit = oracle_limit;
            opts.repeats = repeats;
            if (!k_range.empty()) {
                opts.k_range = parse_range(k_range);
            }
            BenchResult result = cmd_bench(expand_globs(suite), opts);
            if (out_path.empty()) {
                print_bench_csv(std::cout, result);
            } else {
                std::ofstream out(out_path);
                print_bench_csv(out, result);
            }
            return kExitYes;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
