#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace firefighter {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed input: bad endpoints, non-trees passed to tree code,
/// oversized oracle inputs and similar precondition failures.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on vertices [0, n).
///
/// Edges are stored normalized (u < v), sorted and deduplicated; adjacency
/// lists are sorted by vertex id.
class Graph {
public:
    Graph() = default;

    /// Builds a graph, dropping duplicate edges. Throws InvalidInput on a
    /// self-loop or an endpoint outside [0, n).
    static Graph build(std::int32_t n, std::span<const Edge> edges);

    std::int32_t vertex_count() const { return static_cast<std::int32_t>(adjacency_.size()); }
    std::int32_t edge_count() const { return static_cast<std::int32_t>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(adjacency_[static_cast<std::size_t>(v)].size()); }
    std::int32_t max_degree() const;

    bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// True iff every vertex is reachable from vertex 0 (the empty graph counts).
    bool is_connected() const;
    bool is_tree() const { return vertex_count() > 0 && edge_count() == vertex_count() - 1 && is_connected(); }

    /// Vertices reachable from s, as a membership mask.
    std::vector<bool> reachable_from(Vertex s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

inline Graph build_graph(std::int32_t n, std::span<const Edge> edges) { return Graph::build(n, edges); }

/// A tree rooted at a given vertex, with the annotations the tree algorithms
/// consume. Children are ordered by vertex id, which fixes the preorder.
class RootedTree {
public:
    /// Throws InvalidInput unless g is a tree and root is one of its vertices.
    RootedTree(Graph g, Vertex root);

    const Graph& graph() const { return base_; }
    Vertex root() const { return root_; }
    std::int32_t vertex_count() const { return base_.vertex_count(); }

    std::optional<Vertex> parent(Vertex v) const;
    std::span<const Vertex> children(Vertex v) const { return children_[idx(v)]; }
    std::int32_t depth(Vertex v) const { return depth_[idx(v)]; }
    /// Rank of v in the DFS preorder; the root has rank 0.
    std::int32_t preorder(Vertex v) const { return preorder_[idx(v)]; }
    /// One plus the number of descendants; what protecting v alone saves.
    std::int32_t subtree_size(Vertex v) const { return subtree_size_[idx(v)]; }

    /// All vertices listed by preorder rank.
    std::span<const Vertex> preorder_sequence() const { return order_; }
    std::int32_t height() const { return height_; }

    bool is_ancestor(Vertex a, Vertex v) const;

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    Graph base_;
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<std::int32_t> depth_;
    std::vector<std::int32_t> preorder_;
    std::vector<std::int32_t> subtree_size_;
    std::vector<Vertex> order_;
    std::int32_t height_ = 0;
};

inline RootedTree root_tree(const Graph& g, Vertex s) { return RootedTree(g, s); }

}  // namespace firefighter
