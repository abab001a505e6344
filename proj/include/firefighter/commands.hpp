#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "firefighter/general_solvers.hpp"
#include "firefighter/io.hpp"

namespace firefighter {

enum class Problem { MaxProtection, SavingK, AllButK, ExactTree };
enum class SolverKind { Auto, Tree, General, Oracle };

Problem parse_problem(const std::string& name);
SolverKind parse_solver(const std::string& name);
std::string to_string(Problem p);
std::string to_string(SolverKind s);

/// Exit statuses shared by every subcommand.
enum ExitStatus : int { kExitYes = 0, kExitNo = 1, kExitError = 2 };

struct RunReport {
    std::string command;
    std::string problem;
    std::string solver;
    // instance digest
    std::int64_t n = 0, m = 0, s = 0, k = 0;
    std::optional<std::int64_t> target;

    std::optional<bool> decision;
    std::optional<std::int64_t> optimum_saved;
    std::variant<std::monostate, StrategyI, StrategyII> witness;
    std::optional<std::int64_t> burned;
    std::optional<std::int64_t> saved;
    std::optional<std::size_t> illegal_round;
    std::optional<std::uint64_t> search_nodes;
    std::string message;
    double elapsed_ms = 0.0;
    int exit_status = kExitError;

    void print_text(std::ostream& out) const;
    void print_machine(std::ostream& out) const;
};

struct SolveOptions {
    Problem problem = Problem::AllButK;
    SolverKind solver = SolverKind::Auto;
    std::optional<std::int64_t> k;       // overrides the instance's k
    std::optional<std::int64_t> target;  // overrides the instance's K
    std::int32_t oracle_limit = kDefaultOracleLimit;
};

/// Solves one instance and re-verifies any witness by simulation. Errors
/// (bad solver/problem pairing, non-tree input, oracle guard) are reported
/// with exit status kExitError rather than thrown.
RunReport cmd_solve(const InstanceBundle& inst, const SolveOptions& opts);

/// Replays a strategy on an instance.
RunReport cmd_verify(const InstanceBundle& inst, const AnyStrategy& strategy);

enum class GenerateKind { CliqueSaving, CliqueProtection, CrossCompose, RandomTree };
GenerateKind parse_generate_kind(const std::string& name);

struct GenerateRequest {
    GenerateKind kind = GenerateKind::RandomTree;
    std::vector<InstanceBundle> inputs;  // one graph for clique-*, the trees for cross-compose
    std::int64_t k = 0;
    std::optional<std::int64_t> target;  // cross-compose: selects the protection variant
    std::int32_t n = 0;
    std::int32_t max_degree = 3;
    std::uint64_t seed = 0;
};

InstanceBundle cmd_generate(const GenerateRequest& req);

struct BenchRow {
    std::string file;
    std::int64_t n = 0;
    std::int64_t k = 0;
    double median_ms = 0.0;
    std::optional<bool> decision;
    std::optional<std::int64_t> optimum_saved;
    std::uint64_t search_nodes = 0;
    std::string error;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    /// Least-squares slope of log2(median time) against k, over rows that
    /// succeeded; nullopt when fewer than two distinct k values.
    std::optional<double> slope;
};

struct BenchOptions {
    SolveOptions solve;
    int repeats = 3;
    /// When set, every instance is run once per k in [first, last].
    std::optional<std::pair<std::int64_t, std::int64_t>> k_range;
};

BenchResult cmd_bench(const std::vector<std::string>& files, const BenchOptions& opts);
void print_bench_csv(std::ostream& out, const BenchResult& result);

/// Least-squares slope of ys against xs.
std::optional<double> fit_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace firefighter
