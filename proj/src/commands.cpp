#include "firefighter/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "firefighter/generators.hpp"
#include "firefighter/tree_solvers.hpp"

namespace firefighter {

namespace {

template <typename Key>
Key lookup(const std::map<std::string, Key>& table, const std::string& name, const char* what) {
    auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (const auto& [k, v] : table) {
            known += (known.empty() ? "" : ", ") + k;
        }
        throw InvalidInput(std::string("unknown ") + what + " '" + name + "' (expected one of: " + known + ")");
    }
    return it->second;
}

const std::map<std::string, Problem>& problem_names() {
    static const std::map<std::string, Problem> names{{"max-protection", Problem::MaxProtection},
                                                      {"saving-k", Problem::SavingK},
                                                      {"all-but-k", Problem::AllButK},
                                                      {"exact-tree", Problem::ExactTree}};
    return names;
}

const std::map<std::string, SolverKind>& solver_names() {
    static const std::map<std::string, SolverKind> names{
        {"auto", SolverKind::Auto}, {"tree", SolverKind::Tree}, {"general", SolverKind::General}, {"oracle", SolverKind::Oracle}};
    return names;
}

template <typename Key>
std::string name_of(const std::map<std::string, Key>& table, Key key) {
    for (const auto& [name, value] : table) {
        if (value == key) {
            return name;
        }
    }
    return "?";
}

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fill_digest(RunReport& r, const InstanceBundle& inst) {
    r.n = inst.graph.vertex_count();
    r.m = inst.graph.edge_count();
    r.s = inst.source;
    r.k = inst.k;
    r.target = inst.target;
}

SolverKind resolve_solver(Problem problem, SolverKind requested, bool is_tree) {
    if (requested == SolverKind::Auto) {
        if (problem == Problem::ExactTree) {
            return SolverKind::Tree;
        }
        if (is_tree) {
            return SolverKind::Tree;
        }
        return problem == Problem::AllButK ? SolverKind::General : SolverKind::Oracle;
    }
    if (requested == SolverKind::Tree && !is_tree) {
        throw InvalidInput("tree solver requires a tree instance");
    }
    if (requested == SolverKind::General && problem != Problem::AllButK) {
        throw InvalidInput("no general-graph solver for " + to_string(problem) + "; use tree or oracle");
    }
    if (problem == Problem::ExactTree && !is_tree) {
        throw InvalidInput("exact-tree requires a tree instance");
    }
    return requested;
}

// Replays the witness and checks it reproduces what the solver claimed.
void verify_witness(RunReport& r, const InstanceBundle& inst, Problem problem) {
    const Graph& g = inst.graph;
    SimulationOutcome out;
    std::size_t protections = 0;
    if (const auto* s1 = std::get_if<StrategyI>(&r.witness)) {
        out = simulate_v1(g, inst.source, *s1);
        protections = s1->protection_count();
    } else if (const auto* s2 = std::get_if<StrategyII>(&r.witness)) {
        out = simulate_v2(g, inst.source, *s2);
        protections = s2->protected_vertices().size();
    } else {
        return;
    }
    r.burned = static_cast<std::int64_t>(out.burned_count());
    r.saved = static_cast<std::int64_t>(out.saved_count());
    bool ok = true;
    if (r.optimum_saved && *r.optimum_saved != *r.saved) {
        ok = false;
    }
    if (r.decision && *r.decision) {
        switch (problem) {
            case Problem::AllButK: ok = ok && *r.burned <= r.k; break;
            case Problem::SavingK: ok = ok && *r.saved >= r.k; break;
            case Problem::MaxProtection:
                ok = ok && r.target && *r.saved >= *r.target && static_cast<std::int64_t>(protections) <= r.k;
                break;
            case Problem::ExactTree: break;
        }
    }
    if (problem == Problem::MaxProtection && static_cast<std::int64_t>(protections) > r.k) {
        ok = false;
    }
    if (!ok) {
        throw std::logic_error("solver witness does not reproduce the reported result");
    }
}

void run_solver(RunReport& r, const InstanceBundle& inst, Problem problem, SolverKind solver, std::int32_t limit) {
    const Graph& g = inst.graph;
    const Vertex s = inst.source;
    const OracleOptions oracle{limit};
    auto tree = [&] { return RootedTree(g, s); };

    switch (problem) {
        case Problem::MaxProtection: {
            ProtectionResult res = solver == SolverKind::Tree ? max_k_protection_tree(tree(), r.k)
                                                              : brute_force_max_saved_protecting_k(g, s, r.k, oracle);
            r.optimum_saved = res.saved;
            r.witness = std::move(res.strategy);
            if (r.target) {
                r.decision = *r.optimum_saved >= *r.target;
            }
            break;
        }
        case Problem::SavingK: {
            if (solver == SolverKind::Tree) {
                auto d = saving_k_vertices_tree(tree(), r.k);
                r.decision = d.yes;
                if (d.witness) {
                    r.witness = std::move(*d.witness);
                }
            } else {
                // A strategy saving >= k vertices can be cut back to its first
                // k protections and still save k.
                auto res = brute_force_max_saved_protecting_k(g, s, std::max<std::int64_t>(r.k, 0), oracle);
                r.decision = res.saved >= r.k;
                if (*r.decision) {
                    r.witness = std::move(res.strategy);
                }
            }
            break;
        }
        case Problem::AllButK: {
            BranchStats stats;
            if (solver == SolverKind::Tree) {
                auto d = save_all_but_k_tree(tree(), r.k, &stats);
                r.decision = d.yes;
                if (d.witness) {
                    r.witness = std::move(*d.witness);
                }
                r.search_nodes = stats.nodes;
            } else if (solver == SolverKind::General) {
                auto d = save_all_but_k_general(g, s, r.k, &stats);
                r.decision = d.yes;
                if (d.witness) {
                    r.witness = std::move(*d.witness);
                }
                r.search_nodes = stats.nodes;
            } else {
                auto res = brute_force_min_burned(g, s, oracle);
                r.decision = res.burned <= r.k;
                if (*r.decision) {
                    r.witness = std::move(res.strategy);
                }
            }
            break;
        }
        case Problem::ExactTree: {
            if (solver == SolverKind::Tree) {
                auto res = exact_firefighter_tree(tree());
                r.optimum_saved = res.saved;
                r.witness = std::move(res.strategy);
            } else {
                auto res = brute_force_min_burned(g, s, oracle);
                r.optimum_saved = g.vertex_count() - res.burned;
                r.witness = std::move(res.strategy);
            }
            break;
        }
    }
}

void write_rounds(std::ostream& out, const std::vector<std::vector<Vertex>>& rounds) {
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        out << "witness round " << (i + 1);
        if (rounds[i].empty()) {
            out << " -";
        }
        for (Vertex v : rounds[i]) {
            out << ' ' << v;
        }
        out << '\n';
    }
}

std::vector<std::vector<Vertex>> rounds_of(const StrategyI& s) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& m : s.moves) {
        out.push_back(m ? std::vector<Vertex>{*m} : std::vector<Vertex>{});
    }
    return out;
}

}  // namespace

Problem parse_problem(const std::string& name) { return lookup(problem_names(), name, "problem"); }
SolverKind parse_solver(const std::string& name) { return lookup(solver_names(), name, "solver"); }
std::string to_string(Problem p) { return name_of(problem_names(), p); }
std::string to_string(SolverKind s) { return name_of(solver_names(), s); }

GenerateKind parse_generate_kind(const std::string& name) {
    static const std::map<std::string, GenerateKind> names{{"clique-saving", GenerateKind::CliqueSaving},
                                                           {"clique-protection", GenerateKind::CliqueProtection},
                                                           {"cross-compose", GenerateKind::CrossCompose},
                                                           {"random-tree", GenerateKind::RandomTree}};
    return lookup(names, name, "generator");
}

void RunReport::print_text(std::ostream& out) const {
    out << "command " << command << '\n';
    if (!problem.empty()) {
        out << "problem " << problem << '\n';
    }
    if (!solver.empty()) {
        out << "solver " << solver << '\n';
    }
    out << "instance n=" << n << " m=" << m << " s=" << s << " k=" << k;
    if (target) {
        out << " K=" << *target;
    }
    out << '\n';
    if (decision) {
        out << "decision " << (*decision ? "yes" : "no") << '\n';
    }
    if (optimum_saved) {
        out << "optimum saved " << *optimum_saved << '\n';
    }
    if (illegal_round) {
        out << "illegal round " << *illegal_round << '\n';
    }
    if (burned) {
        out << "burned " << *burned << '\n';
    }
    if (saved) {
        out << "saved " << *saved << '\n';
    }
    if (const auto* s1 = std::get_if<StrategyI>(&witness)) {
        out << "witness variant 1\n";
        write_rounds(out, rounds_of(*s1));
    } else if (const auto* s2 = std::get_if<StrategyII>(&witness)) {
        out << "witness variant 2\n";
        write_rounds(out, s2->rounds);
    }
    if (search_nodes) {
        out << "search_nodes " << *search_nodes << '\n';
    }
    if (!message.empty()) {
        out << "message " << message << '\n';
    }
    out << "elapsed_ms " << elapsed_ms << '\n';
}

void RunReport::print_machine(std::ostream& out) const {
    nlohmann::json j;
    j["command"] = command;
    if (!problem.empty()) {
        j["problem"] = problem;
    }
    if (!solver.empty()) {
        j["solver"] = solver;
    }
    j["instance"] = {{"n", n}, {"m", m}, {"s", s}, {"k", k}};
    if (target) {
        j["instance"]["K"] = *target;
    }
    if (decision) {
        j["decision"] = *decision ? "yes" : "no";
    }
    if (optimum_saved) {
        j["optimum_saved"] = *optimum_saved;
    }
    if (illegal_round) {
        j["illegal_round"] = *illegal_round;
    }
    if (burned) {
        j["burned"] = *burned;
    }
    if (saved) {
        j["saved"] = *saved;
    }
    if (const auto* s1 = std::get_if<StrategyI>(&witness)) {
        j["witness"] = {{"variant", 1}, {"rounds", rounds_of(*s1)}};
    } else if (const auto* s2 = std::get_if<StrategyII>(&witness)) {
        j["witness"] = {{"variant", 2}, {"rounds", s2->rounds}};
    }
    if (search_nodes) {
        j["search_nodes"] = *search_nodes;
    }
    if (!message.empty()) {
        j["message"] = message;
    }
    j["elapsed_ms"] = elapsed_ms;
    j["exit_status"] = exit_status;
    out << j.dump() << '\n';
}

RunReport cmd_solve(const InstanceBundle& inst, const SolveOptions& opts) {
    RunReport r;
    r.command = "solve";
    r.problem = to_string(opts.problem);
    fill_digest(r, inst);
    if (opts.k) {
        r.k = *opts.k;
    }
    if (opts.target) {
        r.target = opts.target;
    }
    Stopwatch clock;
    try {
        SolverKind solver = resolve_solver(opts.problem, opts.solver, inst.graph.is_tree());
        r.solver = to_string(solver);
        run_solver(r, inst, opts.problem, solver, opts.oracle_limit);
        r.elapsed_ms = clock.elapsed_ms();
        verify_witness(r, inst, opts.problem);
        r.exit_status = (!r.decision || *r.decision) ? kExitYes : kExitNo;
    } catch (const std::exception& e) {
        r.elapsed_ms = clock.elapsed_ms();
        r.message = e.what();
        r.exit_status = kExitError;
    }
    if (r.solver.empty()) {
        r.solver = to_string(opts.solver);
    }
    return r;
}

RunReport cmd_verify(const InstanceBundle& inst, const AnyStrategy& strategy) {
    RunReport r;
    r.command = "verify";
    fill_digest(r, inst);
    Stopwatch clock;
    try {
        SimulationOutcome out = std::visit(
            [&](const auto& s) {
                r.witness = s;
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StrategyI>) {
                    return simulate_v1(inst.graph, inst.source, s);
                } else {
                    return simulate_v2(inst.graph, inst.source, s);
                }
            },
            strategy);
        r.burned = static_cast<std::int64_t>(out.burned_count());
        r.saved = static_cast<std::int64_t>(out.saved_count());
        r.exit_status = kExitYes;
    } catch (const IllegalMove& e) {
        r.illegal_round = e.round();
        r.message = e.what();
        r.exit_status = kExitNo;
    } catch (const std::exception& e) {
        r.message = e.what();
        r.exit_status = kExitError;
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

InstanceBundle cmd_generate(const GenerateRequest& req) {
    switch (req.kind) {
        case GenerateKind::CliqueSaving:
        case GenerateKind::CliqueProtection: {
            if (req.inputs.size() != 1) {
                throw InvalidInput("clique reductions take exactly one input graph");
            }
            const Graph& g = req.inputs.front().graph;
            return req.kind == GenerateKind::CliqueSaving ? clique_to_saving_instance(g, req.k).instance
                                                          : clique_to_protection_instance(g, req.k).instance;
        }
        case GenerateKind::CrossCompose: {
            std::vector<InstanceBundle> inputs = req.inputs;
            if (req.target) {
                for (auto& in : inputs) {
                    in.target = req.target;
                }
            }
            bool with_target = !inputs.empty() && std::all_of(inputs.begin(), inputs.end(),
                                                              [](const InstanceBundle& in) { return in.target.has_value(); });
            return cross_compose_trees(inputs, with_target ? CompositionKind::Protection : CompositionKind::SaveAllButK)
                .instance;
        }
        case GenerateKind::RandomTree: {
            InstanceBundle out;
            out.graph = random_tree(req.n, req.max_degree, req.seed).graph();
            out.source = 0;
            out.k = req.k;
            out.target = req.target;
            return out;
        }
    }
    throw InvalidInput("unknown generator");
}

std::optional<double> fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        return std::nullopt;
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

BenchResult cmd_bench(const std::vector<std::string>& files, const BenchOptions& opts) {
    BenchResult result;
    std::vector<double> xs, ys;
    for (const auto& file : files) {
        InstanceBundle inst;
        try {
            inst = read_instance_file(file);
        } catch (const std::exception& e) {
            BenchRow row;
            row.file = file;
            row.error = e.what();
            result.rows.push_back(row);
            continue;
        }
        std::vector<std::int64_t> ks;
        if (opts.k_range) {
            for (auto k = opts.k_range->first; k <= opts.k_range->second; ++k) {
                ks.push_back(k);
            }
        } else {
            ks.push_back(opts.solve.k.value_or(inst.k));
        }
        for (auto k : ks) {
            BenchRow row;
            row.file = file;
            row.n = inst.graph.vertex_count();
            row.k = k;
            SolveOptions so = opts.solve;
            so.k = k;
            std::vector<double> times;
            for (int rep = 0; rep < std::max(1, opts.repeats); ++rep) {
                RunReport rep_report = cmd_solve(inst, so);
                if (rep_report.exit_status == kExitError) {
                    row.error = rep_report.message;
                    break;
                }
                times.push_back(rep_report.elapsed_ms);
                row.decision = rep_report.decision;
                row.optimum_saved = rep_report.optimum_saved;
                row.search_nodes = rep_report.search_nodes.value_or(0);
            }
            if (row.error.empty()) {
                std::sort(times.begin(), times.end());
                const std::size_t mid = times.size() / 2;
                row.median_ms = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
                xs.push_back(static_cast<double>(k));
                ys.push_back(std::log2(std::max(row.median_ms, 1e-6)));
            }
            result.rows.push_back(row);
        }
    }
    result.slope = fit_slope(xs, ys);
    return result;
}

void print_bench_csv(std::ostream& out, const BenchResult& result) {
    out << "file,n,k,median_ms,decision,optimum_saved,search_nodes,error\n";
    for (const auto& row : result.rows) {
        out << row.file << ',' << row.n << ',' << row.k << ',' << row.median_ms << ','
            << (row.decision ? (*row.decision ? "yes" : "no") : "") << ','
            << (row.optimum_saved ? std::to_string(*row.optimum_saved) : "") << ',' << row.search_nodes << ','
            << row.error << '\n';
    }
    if (result.slope) {
        out << "# slope_log2_time_per_k " << *result.slope << '\n';
    }
}

}  // namespace firefighter
