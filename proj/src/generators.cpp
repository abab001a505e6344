#include "firefighter/generators.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

namespace firefighter {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

ReductionOutput trivial_instance(bool yes) {
    ReductionOutput out;
    out.trivial = true;
    if (yes) {
        std::vector<Edge> e{{0, 1}};
        out.instance.graph = Graph::build(2, e);
        out.vertex_map = {{0, "s"}, {1, "trivial_yes"}};
    } else {
        out.instance.graph = Graph::build(1, {});
        out.vertex_map = {{0, "s_trivial_no"}};
    }
    out.instance.source = 0;
    out.instance.k = 1;
    out.instance.roles = out.vertex_map;
    return out;
}

ReductionOutput layered_clique_graph(const Graph& g, std::int64_t k) {
    if (k < 2) {
        throw InvalidInput("clique reduction needs k >= 2, got " + std::to_string(k));
    }
    std::int64_t active = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        active += g.degree(v) > 0 ? 1 : 0;
    }
    if (active < k + 1) {
        // With at most k non-isolated vertices a k-clique must be exactly them.
        bool clique = active == k;
        for (Vertex u = 0; clique && u < g.vertex_count(); ++u) {
            for (Vertex v = u + 1; clique && v < g.vertex_count(); ++v) {
                if (g.degree(u) > 0 && g.degree(v) > 0 && !g.has_edge(u, v)) {
                    clique = false;
                }
            }
        }
        return trivial_instance(clique);
    }

    const auto layers = static_cast<Vertex>(k - 1);
    const auto width = static_cast<Vertex>(k);
    auto a = [&](Vertex i, Vertex j) { return 1 + (i - 1) * width + (j - 1); };  // 1-based i, j
    const Vertex vertex_base = 1 + layers * width;
    const Vertex edge_base = vertex_base + g.vertex_count();
    const Vertex total = edge_base + g.edge_count();

    ReductionOutput out;
    std::vector<Edge> edges;
    out.vertex_map.push_back({0, "s"});
    for (Vertex i = 1; i <= layers; ++i) {
        for (Vertex j = 1; j <= width; ++j) {
            out.vertex_map.push_back({a(i, j), "a_" + std::to_string(i) + "_" + std::to_string(j)});
            if (i == 1) {
                edges.emplace_back(0, a(i, j));
            }
            if (i < layers) {
                for (Vertex j2 = 1; j2 <= width; ++j2) {
                    edges.emplace_back(a(i, j), a(i + 1, j2));
                }
            }
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out.vertex_map.push_back({vertex_base + v, "v_" + std::to_string(v)});
        for (Vertex j = 1; j <= width; ++j) {
            edges.emplace_back(a(layers, j), vertex_base + v);
        }
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        const Vertex id = edge_base + static_cast<Vertex>(e);
        out.vertex_map.push_back({id, "e_" + std::to_string(u) + "_" + std::to_string(v)});
        edges.emplace_back(id, vertex_base + u);
        edges.emplace_back(id, vertex_base + v);
    }
    out.instance.graph = Graph::build(total, edges);
    out.instance.source = 0;
    out.instance.roles = out.vertex_map;
    return out;
}

}  // namespace

ReductionOutput clique_to_saving_instance(const Graph& g, std::int64_t k) {
    auto out = layered_clique_graph(g, k);
    if (!out.trivial) {
        out.instance.k = k + choose2(k) + 1;
    }
    return out;
}

ReductionOutput clique_to_protection_instance(const Graph& g, std::int64_t k) {
    auto out = layered_clique_graph(g, k);
    if (out.trivial) {
        out.instance.k = 1;
        out.instance.target = 1;
    } else {
        out.instance.k = k + 1;
        out.instance.target = k + choose2(k) + 1;
    }
    return out;
}

CompositionOutput cross_compose_trees(std::span<const InstanceBundle> inputs, CompositionKind kind) {
    if (inputs.empty()) {
        throw InvalidInput("cross-composition needs at least one instance");
    }
    const auto& first = inputs.front();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto& in = inputs[i];
        const std::string where = "instance " + std::to_string(i) + ": ";
        if (!in.graph.is_tree()) {
            throw InvalidInput(where + "graph is not a tree");
        }
        if (in.graph.max_degree() > 3) {
            throw InvalidInput(where + "maximum degree " + std::to_string(in.graph.max_degree()) + " exceeds 3");
        }
        if (!in.graph.contains(in.source)) {
            throw InvalidInput(where + "root out of range");
        }
        if (in.k != first.k) {
            throw InvalidInput(where + "parameter k differs from instance 0");
        }
        if (kind == CompositionKind::Protection) {
            if (!in.target || !first.target || *in.target != *first.target) {
                throw InvalidInput(where + "target K missing or different from instance 0");
            }
            if (in.graph.vertex_count() != first.graph.vertex_count()) {
                throw InvalidInput(where + "vertex count differs from instance 0");
            }
        }
    }

    std::size_t t = 2;
    int h = 1;
    while (t < inputs.size()) {
        t *= 2;
        ++h;
    }
    CompositionOutput out;
    out.height = h;
    for (std::size_t i = 0; i < t; ++i) {
        out.leaf_map.push_back(std::min(i, inputs.size() - 1));
    }

    // Heap-numbered scaffold: internal node x has children 2x+1, 2x+2; the
    // t leaf slots t-1 .. 2t-2 are replaced by the input roots.
    const auto internal = static_cast<Vertex>(t - 1);
    std::vector<Edge> edges;
    std::vector<VertexRole> roles;
    for (Vertex x = 0; x < internal; ++x) {
        roles.push_back({x, x == 0 ? "scaffold_root" : "scaffold_" + std::to_string(x)});
    }
    Vertex next = internal;
    std::vector<Vertex> graft_root(t);
    for (std::size_t leaf = 0; leaf < t; ++leaf) {
        const auto& in = inputs[out.leaf_map[leaf]];
        const Vertex base = next;
        for (auto [u, v] : in.graph.edges()) {
            edges.emplace_back(base + u, base + v);
        }
        graft_root[leaf] = base + in.source;
        roles.push_back({graft_root[leaf], "leaf_" + std::to_string(leaf) + "_input_" + std::to_string(out.leaf_map[leaf])});
        next += in.graph.vertex_count();
    }
    for (Vertex x = 0; x < internal; ++x) {
        for (Vertex c : {2 * x + 1, 2 * x + 2}) {
            edges.emplace_back(x, c < internal ? c : graft_root[static_cast<std::size_t>(c - internal)]);
        }
    }
    std::sort(roles.begin(), roles.end(), [](const VertexRole& a, const VertexRole& b) { return a.vertex < b.vertex; });

    out.instance.graph = Graph::build(next, edges);
    out.instance.source = 0;
    out.instance.k = first.k + h;
    if (kind == CompositionKind::Protection) {
        const auto tt = static_cast<std::int64_t>(t);
        out.instance.target = *first.target + (tt - 1) * first.graph.vertex_count() + (tt - h - 1);
    }
    out.instance.roles = std::move(roles);
    return out;
}

RootedTree random_tree(std::int32_t n, std::int32_t max_degree, std::uint64_t seed) {
    if (n < 1) {
        throw InvalidInput("random tree needs n >= 1");
    }
    if ((n >= 3 && max_degree < 2) || (n == 2 && max_degree < 1)) {
        throw InvalidInput("no tree on " + std::to_string(n) + " vertices has maximum degree " +
                           std::to_string(max_degree));
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<std::int32_t> degree(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> open{0};
    for (Vertex v = 1; v < n; ++v) {
        const std::size_t pick = static_cast<std::size_t>(rng() % open.size());
        const Vertex u = open[pick];
        edges.emplace_back(u, v);
        if (++degree[static_cast<std::size_t>(u)] == max_degree) {
            open[pick] = open.back();
            open.pop_back();
        }
        if (++degree[static_cast<std::size_t>(v)] < max_degree) {
            open.push_back(v);
        }
    }
    return RootedTree(Graph::build(n, edges), 0);
}

Graph random_graph(std::int32_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            // 53-bit uniform in [0, 1)
            double x = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
            if (x < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::build(n, edges);
}

bool brute_force_has_clique(const Graph& g, std::int64_t k) {
    const std::int32_t n = g.vertex_count();
    if (n > 40) {
        throw InvalidInput("clique oracle size guard: " + std::to_string(n) + " vertices exceeds 40");
    }
    if (k <= 0) {
        return true;
    }
    if (k > n) {
        return false;
    }
    std::vector<Vertex> pick;
    auto extend = [&](auto&& self, Vertex from) -> bool {
        if (static_cast<std::int64_t>(pick.size()) == k) {
            return true;
        }
        for (Vertex v = from; v < n; ++v) {
            if (std::all_of(pick.begin(), pick.end(), [&](Vertex u) { return g.has_edge(u, v); })) {
                pick.push_back(v);
                if (self(self, v + 1)) {
                    return true;
                }
                pick.pop_back();
            }
        }
        return false;
    };
    return extend(extend, 0);
}

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (colour[static_cast<std::size_t>(start)] >= 0) {
            continue;
        }
        colour[static_cast<std::size_t>(start)] = 0;
        std::queue<Vertex> q;
        q.push(start);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                auto& cw = colour[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - colour[static_cast<std::size_t>(u)];
                    q.push(w);
                } else if (cw == colour[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace firefighter
