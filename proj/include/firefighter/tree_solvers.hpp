#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "firefighter/graph.hpp"
#include "firefighter/strategy.hpp"

namespace firefighter {

struct ProtectionResult {
    std::int64_t saved = 0;
    StrategyI strategy;
};

struct Decision {
    bool yes = false;
    std::optional<StrategyI> witness;
};

/// Largest number of characteristic-vector bits the protection DP accepts.
inline constexpr int kMaxProtectionBits = 26;
/// Memory ceiling for the protection DP's live columns and checkpoints.
inline constexpr std::size_t kMaxProtectionTableBytes = std::size_t{2} << 30;

/// Maximum number of vertices savable with at most k protections on a tree.
///
/// Dynamic programme over the vertices of depth <= k taken in preorder,
/// indexed by a bitmask of depths that may still receive a protection and
/// by the deepest forbidden position on the current root path. Only
/// min(k, height) bits are materialised; a column holds 2^bits * (depth + 1)
/// entries and about 2 * sqrt(|L|) columns are live at once (checkpoints plus
/// one replayed segment). The witness protects its
/// vertex at depth d in round d, passing in rounds without a protection.
///
/// Throws InvalidInput when min(k, height) exceeds kMaxProtectionBits or the
/// table would exceed kMaxProtectionTableBytes.
ProtectionResult max_k_protection_tree(const RootedTree& t, std::int64_t k);

/// Saving k Vertices: yes iff some k' in 1..k lets the protection DP save at
/// least k vertices.
Decision saving_k_vertices_tree(const RootedTree& t, std::int64_t k);

/// Optimal Firefighter strategy on a tree: the protection DP with
/// k = ceil(sqrt(2n)).
ProtectionResult exact_firefighter_tree(const RootedTree& t);

/// Smallest k with k*k >= 2n.
std::int64_t exact_tree_budget(std::int64_t n);

/// d(d+1)/2: the minimum number saved by an optimal strategy under which a
/// vertex at depth d burns.
constexpr std::int64_t lemma4_bound(std::int64_t d) { return d * (d + 1) / 2; }

/// Search instrumentation for the branching solvers.
struct BranchStats {
    std::uint64_t nodes = 0;
    /// Called per branch. General solver: (alpha before, alpha after,
    /// |N(B) \ P|) with alpha = (k - |B|) + (i - |P|). Tree solver: (budget
    /// before, budget after, vertices newly caught by fire).
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> on_branch;
};

/// Saving All But k Vertices on a tree, by branching on which child of the
/// burning frontier to protect. Polynomial space, O(2^k n) time.
Decision save_all_but_k_tree(const RootedTree& t, std::int64_t k, BranchStats* stats = nullptr);

/// Raw DP column access, for property tests. Returns A_v(chi, i) for every v
/// in the depth-<=k preorder list, flattened as [position][i][chi]. Only for
/// tiny trees.
struct DpDump {
    int bits = 0;
    std::vector<Vertex> columns;                      // vertices of L in preorder
    std::vector<std::vector<std::int64_t>> values;    // per column, (bits+1) * 2^bits
    std::int64_t at(std::size_t column, std::uint32_t chi, int i) const {
        return values[column][static_cast<std::size_t>(i) * (std::size_t{1} << bits) + chi];
    }
};
DpDump dump_protection_table(const RootedTree& t, std::int64_t k);

}  // namespace firefighter
