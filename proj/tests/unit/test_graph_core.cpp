#include <doctest.h>

#include <sstream>

#include "firefighter/io.hpp"
#include "fixtures.hpp"

using namespace firefighter;

TEST_CASE("graph build normalizes and rejects bad edges") {
    std::vector<Edge> e{{1, 0}, {0, 1}, {2, 1}};
    Graph g = Graph::build(3, e);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));

    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::build(3, loop), InvalidInput);
    std::vector<Edge> out_of_range{{0, 3}};
    CHECK_THROWS_AS(Graph::build(3, out_of_range), InvalidInput);
    CHECK_THROWS_AS(Graph::build(-1, {}), InvalidInput);
}

TEST_CASE("rooted tree bookkeeping") {
    RootedTree t(fixtures::complete_binary(2), 0);
    CHECK(t.height() == 2);
    CHECK(t.depth(6) == 2);
    CHECK(t.parent(0) == std::nullopt);
    CHECK(t.parent(4) == 1);
    CHECK(t.subtree_size(1) == 3);
    auto order = t.preorder_sequence();
    CHECK(std::vector<Vertex>(order.begin(), order.end()) == std::vector<Vertex>{0, 1, 3, 4, 2, 5, 6});
    CHECK(t.is_ancestor(1, 4));
    CHECK(t.is_ancestor(4, 4));
    CHECK_FALSE(t.is_ancestor(2, 4));

    CHECK_THROWS_AS(RootedTree(fixtures::cycle(4), 0), InvalidInput);
    CHECK_THROWS_AS(RootedTree(fixtures::path(3), 5), InvalidInput);

    // rerooting a path in the middle
    RootedTree mid(fixtures::path(5), 2);
    CHECK(mid.height() == 2);
    CHECK(mid.children(2).size() == 2);
}

TEST_CASE("rooted tree enumeration counts") {
    // OEIS A000081
    const int expected[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286};
    for (int n = 1; n <= 9; ++n) {
        auto trees = fixtures::rooted_trees(n);
        CHECK(trees.size() == static_cast<std::size_t>(expected[n]));
        for (const auto& g : trees) {
            CHECK(g.is_tree());
        }
    }
}

TEST_CASE("simulate_v1 on a binary tree") {
    Graph g = fixtures::complete_binary(2);
    auto out = simulate_v1(g, 0, StrategyI::from_vertices({1, 5}));
    CHECK(out.burned == std::vector<Vertex>{0, 2, 6});
    CHECK(out.saved_count() == 4);
    CHECK(out.protected_set == std::vector<Vertex>{1, 5});

    auto nothing = simulate_v1(g, 0, StrategyI{});
    CHECK(nothing.burned_count() == 7);
    CHECK(nothing.timeline.size() == 2);
}

TEST_CASE("simulate_v1 illegal moves") {
    Graph c4 = fixtures::cycle(4);
    // vertex 3 catches fire in round 1, so protecting it in round 2 is illegal
    try {
        simulate_v1(c4, 0, StrategyI::from_vertices({1, 3}));
        FAIL("expected IllegalMove");
    } catch (const IllegalMove& e) {
        CHECK(e.round() == 2);
    }
    auto ok = simulate_v1(c4, 0, StrategyI::from_vertices({1, 2}));
    CHECK(ok.burned == std::vector<Vertex>{0, 3});

    CHECK_THROWS_AS(simulate_v1(c4, 0, StrategyI::from_vertices({0})), IllegalMove);
    CHECK_THROWS_AS(simulate_v1(c4, 0, StrategyI::from_vertices({1, 1})), IllegalMove);
    CHECK_THROWS_AS(simulate_v1(c4, 0, StrategyI::from_vertices({9})), IllegalMove);
}

TEST_CASE("simulate_v1 pass and late moves") {
    Graph p = fixtures::path(5);
    StrategyI s;
    s.moves = {std::nullopt, 3};
    auto out = simulate_v1(p, 0, s);
    CHECK(out.burned == std::vector<Vertex>{0, 1, 2});

    // moves after the fire died are still checked but harmless
    StrategyI late = StrategyI::from_vertices({1, 4});
    auto out2 = simulate_v1(p, 0, late);
    CHECK(out2.burned == std::vector<Vertex>{0});
    CHECK(out2.protected_set == std::vector<Vertex>{1, 4});
}

TEST_CASE("simulate_v2 budget and adjacency") {
    Graph star = fixtures::star(4);
    StrategyII ok{{{1}, {}}};
    CHECK(simulate_v2(star, 0, ok).burned_count() == 4);

    StrategyII over{{{1, 2}}};
    CHECK_THROWS_AS(simulate_v2(star, 0, over), IllegalMove);

    Graph p = fixtures::path(4);
    StrategyII far{{{3}}};  // not adjacent to fire
    CHECK_THROWS_AS(simulate_v2(p, 0, far), IllegalMove);

    // saved-up budget: pass in round 1, protect two in round 2
    Graph g = Graph::build(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {1, 4}, {0, 5}});
    StrategyII banked{{{5}, {}}};
    CHECK(simulate_v2(g, 0, banked).burned == std::vector<Vertex>{0, 1, 2, 3, 4});
    StrategyII late{{{}, {2, 3}}};
    auto out = simulate_v2(g, 0, late);
    CHECK(out.burned == std::vector<Vertex>{0, 1, 4, 5});

    StrategyII dup{{{1, 1}}};
    CHECK_THROWS_AS(simulate_v2(p, 0, dup), IllegalMove);
}

TEST_CASE("instance round trip") {
    InstanceBundle inst{fixtures::triangle_pendant(), 2, 3, 5, {{0, "s"}, {3, "leaf x"}}};
    std::ostringstream out;
    write_instance(out, inst);
    std::istringstream in(out.str());
    InstanceBundle back = parse_instance(in);
    CHECK(back == inst);
}

TEST_CASE("instance parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            parse_instance(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("# comment\n3 2 0\n0 1\n1 2\n") == 2);
    CHECK(line_of("3 2 0 1\n0 1\n") > 0);
    CHECK(line_of("3 2 0 1\n0 1\n1 x\n") == 3);
    CHECK(line_of("3 1 7 1\n0 1\n") == 1);
    CHECK(line_of("3 1 0 1\n0 0\n") > 0);
    CHECK(line_of("3 2 0 1\n0 1\n1 2\n") == 0);
}

TEST_CASE("strategy round trip") {
    StrategyI one;
    one.moves = {3, std::nullopt, 5};
    std::ostringstream a;
    write_strategy(a, one);
    std::istringstream ia(a.str());
    CHECK(std::get<StrategyI>(parse_strategy(ia)) == one);

    StrategyII two{{{1, 2}, {}, {4}}};
    std::ostringstream b;
    write_strategy(b, two);
    std::istringstream ib(b.str());
    CHECK(std::get<StrategyII>(parse_strategy(ib)) == two);

    std::istringstream bad("variant 1\n1 2\n");
    CHECK_THROWS_AS(parse_strategy(bad), ParseError);
    std::istringstream headless("1\n");
    CHECK_THROWS_AS(parse_strategy(headless), ParseError);
}
