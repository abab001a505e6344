#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "firefighter/graph.hpp"

namespace firefighter {

/// Classic rules: at most one protection per round. std::nullopt is a pass.
struct StrategyI {
    std::vector<std::optional<Vertex>> moves;

    static StrategyI from_vertices(const std::vector<Vertex>& vertices);
    std::vector<Vertex> protected_vertices() const;
    std::size_t protection_count() const;

    friend bool operator==(const StrategyI&, const StrategyI&) = default;
};

/// Relaxed rules: any number of protections per round, each adjacent to the
/// fire, with at most i protections after i rounds.
struct StrategyII {
    std::vector<std::vector<Vertex>> rounds;

    std::vector<Vertex> protected_vertices() const;

    friend bool operator==(const StrategyII&, const StrategyII&) = default;
};

/// A strategy move rejected by a simulator. round is 1-based.
class IllegalMove : public std::runtime_error {
public:
    IllegalMove(std::size_t round, const std::string& what);
    std::size_t round() const { return round_; }

private:
    std::size_t round_;
};

struct RoundRecord {
    std::vector<Vertex> newly_protected;
    std::vector<Vertex> newly_burned;
};

/// Result of replaying a strategy. All vertex lists are sorted ascending.
struct SimulationOutcome {
    std::vector<Vertex> burned;
    std::vector<Vertex> saved;
    std::vector<Vertex> protected_set;
    std::vector<RoundRecord> timeline;

    std::size_t burned_count() const { return burned.size(); }
    std::size_t saved_count() const { return saved.size(); }
};

/// Replays a classic strategy. Round t applies move t (if any) and then
/// spreads the fire; the run ends once the fire stops and the moves are
/// exhausted. Throws IllegalMove when a protected vertex is burning or
/// already protected, and InvalidInput for an unknown vertex.
SimulationOutcome simulate_v1(const Graph& g, Vertex s, const StrategyI& strategy);

/// Replays a relaxed strategy. Throws IllegalMove on a budget violation, a
/// protected vertex with no burning neighbour, or a burning/already protected
/// vertex.
SimulationOutcome simulate_v2(const Graph& g, Vertex s, const StrategyII& strategy);

}  // namespace firefighter
