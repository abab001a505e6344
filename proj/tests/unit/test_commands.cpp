#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "firefighter/commands.hpp"
#include "fixtures.hpp"

using namespace firefighter;

namespace {

InstanceBundle binary_tree(std::int64_t k) { return {fixtures::complete_binary(2), 0, k, std::nullopt, {}}; }

nlohmann::json machine(const RunReport& r) {
    std::ostringstream out;
    r.print_machine(out);
    return nlohmann::json::parse(out.str());
}

}  // namespace

TEST_CASE("name tables round trip") {
    for (auto p : {Problem::MaxProtection, Problem::SavingK, Problem::AllButK, Problem::ExactTree}) {
        CHECK(parse_problem(to_string(p)) == p);
    }
    for (auto s : {SolverKind::Auto, SolverKind::Tree, SolverKind::General, SolverKind::Oracle}) {
        CHECK(parse_solver(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_problem("nope"), InvalidInput);
    CHECK_THROWS_AS(parse_solver("fast"), InvalidInput);
}

TEST_CASE("solve reports and exit statuses") {
    SolveOptions opts;
    opts.problem = Problem::MaxProtection;
    auto r = cmd_solve(binary_tree(2), opts);
    CHECK(r.exit_status == kExitYes);
    CHECK(r.solver == "tree");
    CHECK(r.optimum_saved == 4);
    CHECK(r.saved == 4);

    opts.target = 5;
    r = cmd_solve(binary_tree(2), opts);
    CHECK(r.decision == false);
    CHECK(r.exit_status == kExitNo);

    SolveOptions abk;
    abk.problem = Problem::AllButK;
    abk.k = 2;
    CHECK(cmd_solve(binary_tree(0), abk).exit_status == kExitNo);
    abk.k = 3;
    auto yes = cmd_solve(binary_tree(0), abk);
    CHECK(yes.exit_status == kExitYes);
    CHECK(yes.burned == 3);
    CHECK(yes.search_nodes.has_value());

    InstanceBundle c4{fixtures::cycle(4), 0, 2, std::nullopt, {}};
    auto gen = cmd_solve(c4, abk);
    CHECK(gen.solver == "general");
    CHECK(std::holds_alternative<StrategyII>(gen.witness));

    SolveOptions bad;
    bad.problem = Problem::ExactTree;
    auto err = cmd_solve(c4, bad);
    CHECK(err.exit_status == kExitError);
    CHECK_FALSE(err.message.empty());

    SolveOptions guard;
    guard.problem = Problem::AllButK;
    guard.solver = SolverKind::Oracle;
    InstanceBundle big{fixtures::path(20), 0, 1, std::nullopt, {}};
    CHECK(cmd_solve(big, guard).exit_status == kExitError);
    guard.oracle_limit = 20;
    CHECK(cmd_solve(big, guard).exit_status == kExitYes);
}

TEST_CASE("solver choices agree") {
    InstanceBundle inst{fixtures::from_levels({0, 1, 2, 2, 1, 2, 3, 1}), 0, 3, std::nullopt, {}};
    for (auto problem : {Problem::MaxProtection, Problem::SavingK, Problem::AllButK, Problem::ExactTree}) {
        std::optional<bool> decision;
        std::optional<std::int64_t> optimum;
        for (auto solver : {SolverKind::Tree, SolverKind::General, SolverKind::Oracle}) {
            if (solver == SolverKind::General && problem != Problem::AllButK) {
                continue;
            }
            SolveOptions opts;
            opts.problem = problem;
            opts.solver = solver;
            auto r = cmd_solve(inst, opts);
            REQUIRE(r.exit_status != kExitError);
            if (decision) {
                CHECK(r.decision == decision);
                CHECK(r.optimum_saved == optimum);
            }
            decision = r.decision;
            optimum = r.optimum_saved;
        }
    }
}

TEST_CASE("verify flags the illegal cycle move") {
    InstanceBundle c4{fixtures::cycle(4), 0, 2, std::nullopt, {}};
    auto bad = cmd_verify(c4, StrategyI::from_vertices({1, 3}));
    CHECK(bad.exit_status == kExitNo);
    CHECK(bad.illegal_round == 2);
    auto good = cmd_verify(c4, StrategyI::from_vertices({1, 2}));
    CHECK(good.exit_status == kExitYes);
    CHECK(good.burned == 2);
    auto j = machine(good);
    CHECK(j["burned"] == 2);
    CHECK(j["exit_status"] == 0);
}

TEST_CASE("machine output") {
    SolveOptions opts;
    opts.problem = Problem::AllButK;
    auto j = machine(cmd_solve(binary_tree(3), opts));
    CHECK(j["decision"] == "yes");
    CHECK(j["instance"]["n"] == 7);
    CHECK(j["problem"] == "all-but-k");
    CHECK(j.contains("witness"));
}

TEST_CASE("generate") {
    GenerateRequest req;
    req.kind = GenerateKind::RandomTree;
    req.n = 30;
    req.seed = 4;
    req.k = 3;
    auto t = cmd_generate(req);
    CHECK(t.graph.vertex_count() == 30);
    CHECK(t.graph.max_degree() <= 3);
    CHECK(t.k == 3);

    GenerateRequest clique;
    clique.kind = GenerateKind::CliqueProtection;
    clique.k = 3;
    clique.inputs = {InstanceBundle{fixtures::triangle_pendant(), 0, 0, std::nullopt, {}}};
    auto c = cmd_generate(clique);
    CHECK(c.k == 4);
    CHECK(c.target == 7);
    CHECK(c.roles.size() == 15);

    GenerateRequest comp;
    comp.kind = GenerateKind::CrossCompose;
    InstanceBundle p3{fixtures::path(3), 0, 1, std::nullopt, {}};
    comp.inputs = {p3, p3};
    CHECK(cmd_generate(comp).k == 2);
    comp.target = 2;
    CHECK(cmd_generate(comp).target.has_value());
}

TEST_CASE("bench on files") {
    const std::string path = "bench_tree_instance.txt";
    GenerateRequest req;
    req.kind = GenerateKind::RandomTree;
    req.n = 200;
    req.seed = 1;
    write_instance_file(path, cmd_generate(req));

    BenchOptions opts;
    opts.solve.problem = Problem::AllButK;
    opts.solve.solver = SolverKind::Tree;
    opts.repeats = 3;
    opts.k_range = std::make_pair<std::int64_t, std::int64_t>(2, 5);
    auto result = cmd_bench({path, "missing_file.txt"}, opts);
    CHECK(result.rows.size() == 5);
    CHECK(result.slope.has_value());
    CHECK_FALSE(result.rows.back().error.empty());
    std::ostringstream csv;
    print_bench_csv(csv, result);
    CHECK(csv.str().rfind("file,n,k,median_ms", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("fit slope") {
    CHECK(*fit_slope({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0));
    CHECK_FALSE(fit_slope({1, 1}, {2, 3}).has_value());
    CHECK_FALSE(fit_slope({1}, {2}).has_value());
}
