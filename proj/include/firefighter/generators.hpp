#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "firefighter/graph.hpp"
#include "firefighter/io.hpp"

namespace firefighter {

/// A generated instance plus the role of each constructed vertex.
struct ReductionOutput {
    InstanceBundle instance;
    std::vector<VertexRole> vertex_map;
    /// True when the input had too few non-isolated vertices and a fixed
    /// yes/no instance was emitted instead of the layered construction.
    bool trivial = false;
};

/// k-Clique -> Saving k' Vertices on a bipartite graph.
///
/// Vertex layout: 0 is the ignition vertex s; then the k-1 connector layers
/// a(i, j) row-major; then one vertex per input vertex; then one vertex per
/// input edge in sorted endpoint order. Budget k' = k + C(k, 2) + 1.
/// Throws InvalidInput for k < 2.
ReductionOutput clique_to_saving_instance(const Graph& g, std::int64_t k);

/// Same graph; protection budget k + 1 and saving target k + C(k, 2) + 1.
ReductionOutput clique_to_protection_instance(const Graph& g, std::int64_t k);

enum class CompositionKind {
    SaveAllButK,  ///< k' = k + h
    Protection,   ///< k' = k + h, K' = K + (t-1)n + (t-h-1)
};

struct CompositionOutput {
    InstanceBundle instance;
    /// leaf_map[i] = index of the input grafted at scaffold leaf i.
    std::vector<std::size_t> leaf_map;
    int height = 0;
};

/// OR-composition of rooted trees of max degree 3 sharing the parameter k:
/// pads to t = 2^h >= 2 inputs by repeating the last one, builds a full
/// binary tree with t leaves and grafts input i at leaf i. For
/// CompositionKind::Protection every input must carry the same vertex count
/// and target K.
CompositionOutput cross_compose_trees(std::span<const InstanceBundle> inputs,
                                      CompositionKind kind = CompositionKind::SaveAllButK);

/// Random tree by degree-capped uniform attachment: vertex i joins a
/// uniformly chosen earlier vertex whose degree is still below the cap.
/// Rooted at 0; identical output for identical (n, max_degree, seed).
RootedTree random_tree(std::int32_t n, std::int32_t max_degree, std::uint64_t seed);

/// Erdős–Rényi G(n, p) from a seed.
Graph random_graph(std::int32_t n, double p, std::uint64_t seed);

/// Exhaustive k-subset clique test. Throws InvalidInput above 40 vertices.
bool brute_force_has_clique(const Graph& g, std::int64_t k);

bool is_bipartite(const Graph& g);

}  // namespace firefighter
