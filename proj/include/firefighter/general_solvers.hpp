#pragma once

#include <cstdint>
#include <optional>

#include "firefighter/graph.hpp"
#include "firefighter/strategy.hpp"
#include "firefighter/tree_solvers.hpp"

namespace firefighter {

/// Classic -> relaxed: each protected vertex is re-protected in the first
/// round in which it touches the fire; protected vertices that never touch
/// the fire are dropped. The burned set is unchanged.
StrategyII strategy_I_to_II(const Graph& g, Vertex s, const StrategyI& strategy);

/// Relaxed -> classic: protected vertices in order of their round (ties by
/// id), one per round. The burned set is unchanged.
StrategyI strategy_II_to_I(const Graph& g, Vertex s, const StrategyII& strategy);

struct DecisionII {
    bool yes = false;
    std::optional<StrategyII> witness;
};

/// Saving All But k Vertices on any graph via the relaxed rules.
///
/// Search state is (burning set B, protected set P, round i). Rejects once
/// |B| > k, accepts once the spare budget i - |P| covers N(B) \ P, and
/// otherwise branches on every subset of N(B) \ P of size at most the spare
/// budget, smallest subsets first. No memoisation: polynomial space.
DecisionII save_all_but_k_general(const Graph& g, Vertex s, std::int64_t k, BranchStats* stats = nullptr);

/// Default vertex-count limit for the exhaustive oracles.
inline constexpr std::int32_t kDefaultOracleLimit = 14;

struct OracleOptions {
    std::int32_t max_vertices = kDefaultOracleLimit;
};

struct BurnResult {
    std::int64_t burned = 0;
    StrategyI strategy;
};

/// Exact minimum number of burned vertices over all classic strategies,
/// by exhaustive search over every protect/pass choice per round with
/// memoisation on (burning, protected). Throws InvalidInput above the limit.
BurnResult brute_force_min_burned(const Graph& g, Vertex s, OracleOptions opts = {});

/// Exact maximum saved over classic strategies protecting at most k vertices.
ProtectionResult brute_force_max_saved_protecting_k(const Graph& g, Vertex s, std::int64_t k, OracleOptions opts = {});

}  // namespace firefighter
