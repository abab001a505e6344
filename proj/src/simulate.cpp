#include <algorithm>
#include <cstdint>
#include <string>

#include "firefighter/strategy.hpp"

namespace firefighter {

namespace {

enum class Cell : std::uint8_t { Untouched, Burning, Protected };

class FireState {
public:
    FireState(const Graph& g, Vertex s) : g_(g), cells_(static_cast<std::size_t>(g.vertex_count()), Cell::Untouched) {
        if (!g.contains(s)) {
            throw InvalidInput("ignition vertex " + std::to_string(s) + " is not a vertex");
        }
        at(s) = Cell::Burning;
        frontier_.push_back(s);
    }

    Cell& at(Vertex v) { return cells_[static_cast<std::size_t>(v)]; }
    Cell at(Vertex v) const { return cells_[static_cast<std::size_t>(v)]; }

    bool touches_fire(Vertex v) const {
        auto nbrs = g_.neighbors(v);
        return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return at(w) == Cell::Burning; });
    }

    void check_vertex(std::size_t round, Vertex v) const {
        if (!g_.contains(v)) {
            throw IllegalMove(round, "vertex " + std::to_string(v) + " does not exist");
        }
        if (at(v) == Cell::Burning) {
            throw IllegalMove(round, "vertex " + std::to_string(v) + " is already burning");
        }
        if (at(v) == Cell::Protected) {
            throw IllegalMove(round, "vertex " + std::to_string(v) + " is already protected");
        }
    }

    /// Burns every untouched neighbour of the last burned layer.
    std::vector<Vertex> spread() {
        std::vector<Vertex> next;
        for (Vertex u : frontier_) {
            for (Vertex w : g_.neighbors(u)) {
                if (at(w) == Cell::Untouched) {
                    at(w) = Cell::Burning;
                    next.push_back(w);
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier_ = next;
        return next;
    }

    /// True while the last burned layer still has an untouched neighbour.
    bool fire_active() const {
        return std::any_of(frontier_.begin(), frontier_.end(), [&](Vertex u) {
            auto nbrs = g_.neighbors(u);
            return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return at(w) == Cell::Untouched; });
        });
    }

    SimulationOutcome finish(std::vector<RoundRecord> timeline) const {
        SimulationOutcome out;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (at(v) == Cell::Burning) {
                out.burned.push_back(v);
            } else {
                out.saved.push_back(v);
                if (at(v) == Cell::Protected) {
                    out.protected_set.push_back(v);
                }
            }
        }
        out.timeline = std::move(timeline);
        return out;
    }

private:
    const Graph& g_;
    std::vector<Cell> cells_;
    std::vector<Vertex> frontier_;
};

}  // namespace

IllegalMove::IllegalMove(std::size_t round, const std::string& what)
    : std::runtime_error("round " + std::to_string(round) + ": " + what), round_(round) {}

StrategyI StrategyI::from_vertices(const std::vector<Vertex>& vertices) {
    StrategyI s;
    s.moves.assign(vertices.begin(), vertices.end());
    return s;
}

std::vector<Vertex> StrategyI::protected_vertices() const {
    std::vector<Vertex> out;
    for (const auto& m : moves) {
        if (m) {
            out.push_back(*m);
        }
    }
    return out;
}

std::size_t StrategyI::protection_count() const {
    return static_cast<std::size_t>(std::count_if(moves.begin(), moves.end(), [](const auto& m) { return m.has_value(); }));
}

std::vector<Vertex> StrategyII::protected_vertices() const {
    std::vector<Vertex> out;
    for (const auto& r : rounds) {
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

SimulationOutcome simulate_v1(const Graph& g, Vertex s, const StrategyI& strategy) {
    FireState state(g, s);
    std::vector<RoundRecord> timeline;
    for (std::size_t round = 1; state.fire_active() || round <= strategy.moves.size(); ++round) {
        RoundRecord rec;
        if (round <= strategy.moves.size()) {
            if (const auto& move = strategy.moves[round - 1]) {
                state.check_vertex(round, *move);
                state.at(*move) = Cell::Protected;
                rec.newly_protected.push_back(*move);
            }
        }
        rec.newly_burned = state.spread();
        timeline.push_back(std::move(rec));
    }
    return state.finish(std::move(timeline));
}

SimulationOutcome simulate_v2(const Graph& g, Vertex s, const StrategyII& strategy) {
    FireState state(g, s);
    std::vector<RoundRecord> timeline;
    std::size_t protected_so_far = 0;
    for (std::size_t round = 1; state.fire_active() || round <= strategy.rounds.size(); ++round) {
        RoundRecord rec;
        if (round <= strategy.rounds.size()) {
            // Adjacency is judged against the fire at the start of the round,
            // so validate the whole set before marking anything.
            const auto& batch = strategy.rounds[round - 1];
            for (std::size_t j = 0; j < batch.size(); ++j) {
                state.check_vertex(round, batch[j]);
                if (std::find(batch.begin(), batch.begin() + static_cast<std::ptrdiff_t>(j), batch[j]) !=
                    batch.begin() + static_cast<std::ptrdiff_t>(j)) {
                    throw IllegalMove(round, "vertex " + std::to_string(batch[j]) + " listed twice");
                }
                if (!state.touches_fire(batch[j])) {
                    throw IllegalMove(round, "vertex " + std::to_string(batch[j]) + " has no burning neighbour");
                }
            }
            protected_so_far += batch.size();
            if (protected_so_far > round) {
                throw IllegalMove(round, std::to_string(protected_so_far) + " protections exceed the budget of " +
                                             std::to_string(round));
            }
            for (Vertex v : batch) {
                state.at(v) = Cell::Protected;
            }
            rec.newly_protected = batch;
            std::sort(rec.newly_protected.begin(), rec.newly_protected.end());
        }
        rec.newly_burned = state.spread();
        timeline.push_back(std::move(rec));
    }
    return state.finish(std::move(timeline));
}

}  // namespace firefighter
