#pragma once

// Shared graph builders and test-only oracles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <tuple>
#include <vector>

#include "firefighter/graph.hpp"
#include "firefighter/strategy.hpp"

namespace fixtures {

using firefighter::Edge;
using firefighter::Graph;
using firefighter::RootedTree;
using firefighter::Vertex;

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph::build(n, e);
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) {
        e.emplace_back(0, i);
    }
    return Graph::build(leaves + 1, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph::build(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return Graph::build(n, e);
}

/// Heap-numbered complete binary tree; height 2 gives 7 vertices.
inline Graph complete_binary(int height) {
    int n = (1 << (height + 1)) - 1;
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
        e.emplace_back((v - 1) / 2, v);
    }
    return Graph::build(n, e);
}

/// Triangle 0-1-2 plus pendant edge 2-3.
inline Graph triangle_pendant() {
    std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    return Graph::build(4, e);
}

/// Graph from a level sequence (root at level 0, preorder).
inline Graph from_levels(const std::vector<int>& levels) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        std::size_t j = i;
        while (levels[--j] != levels[i] - 1) {
        }
        e.emplace_back(static_cast<Vertex>(j), static_cast<Vertex>(i));
    }
    return Graph::build(static_cast<std::int32_t>(levels.size()), e);
}

/// Every non-isomorphic rooted tree on n vertices, rooted at vertex 0, via
/// canonical level sequences (Beyer-Hedetniemi successor rule).
inline std::vector<Graph> rooted_trees(int n) {
    std::vector<Graph> out;
    if (n <= 0) {
        return out;
    }
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        levels[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        out.push_back(from_levels(levels));
        int p = n - 1;
        while (p > 0 && levels[static_cast<std::size_t>(p)] <= 1) {
            --p;
        }
        if (p == 0) {
            break;
        }
        int q = p - 1;
        while (levels[static_cast<std::size_t>(q)] != levels[static_cast<std::size_t>(p)] - 1) {
            --q;
        }
        for (int i = p; i < n; ++i) {
            levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
        }
    }
    return out;
}

/// Test-only oracle: enumerates every classic strategy prefix (pass or any
/// vertex each round), replaying each through simulate_v1. Returns the
/// minimum burned count; with a budget, only strategies protecting at most
/// `budget` vertices count and the return value is the maximum saved.
/// Exponential; keep n <= 7.
struct NaiveEnumeration {
    std::int64_t min_burned = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_saved = 0;
};

inline NaiveEnumeration naive_enumerate(const Graph& g, Vertex s, std::int64_t budget) {
    NaiveEnumeration best;
    firefighter::StrategyI current;
    std::function<void(std::int64_t)> extend = [&](std::int64_t used) {
        firefighter::SimulationOutcome out;
        try {
            out = firefighter::simulate_v1(g, s, current);
        } catch (const firefighter::IllegalMove&) {
            return;
        }
        best.min_burned = std::min<std::int64_t>(best.min_burned, static_cast<std::int64_t>(out.burned_count()));
        best.max_saved = std::max<std::int64_t>(best.max_saved, static_cast<std::int64_t>(out.saved_count()));
        // Only extend while the fire is still spreading after the prefix.
        bool active = out.timeline.size() > current.moves.size() && !out.timeline[current.moves.size()].newly_burned.empty();
        if (!active) {
            return;
        }
        current.moves.emplace_back(std::nullopt);
        extend(used);
        current.moves.pop_back();
        if (budget >= 0 && used >= budget) {
            return;
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            current.moves.emplace_back(v);
            extend(used + 1);
            current.moves.pop_back();
        }
    };
    extend(0);
    return best;
}

/// Test-only oracle for the batch-protection rules: exhaustive search over
/// subsets of the fire's open neighbourhood, memoized on (burned, protected,
/// spare budget). Returns the minimum burned count. Keep n <= 12.
inline std::int64_t batch_min_burned(const Graph& g, Vertex s) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    std::map<std::tuple<std::uint32_t, std::uint32_t, int>, std::int64_t> memo;
    std::function<std::int64_t(std::uint32_t, std::uint32_t, std::uint32_t, int)> go =
        [&](std::uint32_t burned, std::uint32_t prot, std::uint32_t fresh, int spare) -> std::int64_t {
        std::uint32_t open = 0;
        for (int v = 0; v < n; ++v) {
            if (fresh & (1u << v)) {
                open |= adj[static_cast<std::size_t>(v)];
            }
        }
        open &= ~burned & ~prot;
        if (open == 0) {
            return std::popcount(burned);
        }
        spare = std::min(spare + 1, n);  // this round's firefighter
        auto key = std::make_tuple(burned, prot, spare);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        // every subset of open with at most `spare` members
        for (std::uint32_t sub = open;; sub = (sub - 1) & open) {
            int used = std::popcount(sub);
            if (used <= spare) {
                std::uint32_t lit = open & ~sub;
                best = std::min(best, go(burned | lit, prot | sub, lit, spare - used));
            }
            if (sub == 0) {
                break;
            }
        }
        memo[key] = best;
        return best;
    };
    std::uint32_t start = 1u << s;
    return go(start, 0, start, 0);
}

}  // namespace fixtures
