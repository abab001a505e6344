#include "firefighter/graph.hpp"

#include <algorithm>
#include <string>

namespace firefighter {

Graph Graph::build(std::int32_t n, std::span<const Edge> edges) {
    if (n < 0) {
        throw InvalidInput("vertex count must be non-negative, got " + std::to_string(n));
    }
    Graph g;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        }
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
    }
    return g;
}

std::int32_t Graph::max_degree() const {
    std::int32_t best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, static_cast<std::int32_t>(list.size()));
    }
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<bool> Graph::reachable_from(Vertex s) const {
    std::vector<bool> seen(adjacency_.size(), false);
    if (!contains(s)) {
        return seen;
    }
    std::vector<Vertex> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

bool Graph::is_connected() const {
    if (adjacency_.empty()) {
        return true;
    }
    auto seen = reachable_from(0);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

RootedTree::RootedTree(Graph g, Vertex root) : base_(std::move(g)), root_(root) {
    const std::int32_t n = base_.vertex_count();
    if (!base_.contains(root)) {
        throw InvalidInput("root " + std::to_string(root) + " is not a vertex");
    }
    if (!base_.is_tree()) {
        throw InvalidInput("graph is not a tree (n=" + std::to_string(n) +
                           ", m=" + std::to_string(base_.edge_count()) + ")");
    }
    const auto un = static_cast<std::size_t>(n);
    parent_.assign(un, -1);
    children_.assign(un, {});
    depth_.assign(un, 0);
    preorder_.assign(un, -1);
    subtree_size_.assign(un, 1);
    order_.reserve(un);

    // Iterative DFS; neighbours are sorted, so pushing them in reverse visits
    // children in increasing id order.
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        preorder_[idx(u)] = static_cast<std::int32_t>(order_.size());
        order_.push_back(u);
        height_ = std::max(height_, depth_[idx(u)]);
        auto nbrs = base_.neighbors(u);
        for (Vertex w : nbrs) {
            if (w != parent_[idx(u)]) {
                parent_[idx(w)] = u;
                depth_[idx(w)] = depth_[idx(u)] + 1;
                children_[idx(u)].push_back(w);
            }
        }
        for (auto it = children_[idx(u)].rbegin(); it != children_[idx(u)].rend(); ++it) {
            stack.push_back(*it);
        }
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        if (parent_[idx(*it)] >= 0) {
            subtree_size_[idx(parent_[idx(*it)])] += subtree_size_[idx(*it)];
        }
    }
}

std::optional<Vertex> RootedTree::parent(Vertex v) const {
    Vertex p = parent_[idx(v)];
    if (p < 0) {
        return std::nullopt;
    }
    return p;
}

bool RootedTree::is_ancestor(Vertex a, Vertex v) const {
    // Preorder interval containment.
    return preorder(a) <= preorder(v) && preorder(v) < preorder(a) + subtree_size(a);
}

}  // namespace firefighter
