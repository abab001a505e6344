#include "firefighter/general_solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace firefighter {

namespace {

enum class Cell : std::uint8_t { Untouched, Burning, Protected };

}  // namespace

StrategyII strategy_I_to_II(const Graph& g, Vertex s, const StrategyI& strategy) {
    const auto reference = simulate_v1(g, s, strategy);  // validates
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<bool> wanted(n, false);
    for (Vertex p : reference.protected_set) {
        wanted[static_cast<std::size_t>(p)] = true;
    }
    std::vector<Cell> cells(n, Cell::Untouched);
    cells[static_cast<std::size_t>(s)] = Cell::Burning;
    std::vector<Vertex> frontier{s};
    StrategyII out;
    while (!frontier.empty()) {
        std::vector<Vertex> batch;
        for (Vertex u : frontier) {
            for (Vertex w : g.neighbors(u)) {
                auto uw = static_cast<std::size_t>(w);
                if (wanted[uw] && cells[uw] == Cell::Untouched) {
                    cells[uw] = Cell::Protected;
                    batch.push_back(w);
                }
            }
        }
        std::sort(batch.begin(), batch.end());
        out.rounds.push_back(std::move(batch));
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex w : g.neighbors(u)) {
                auto uw = static_cast<std::size_t>(w);
                if (cells[uw] == Cell::Untouched) {
                    cells[uw] = Cell::Burning;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    while (!out.rounds.empty() && out.rounds.back().empty()) {
        out.rounds.pop_back();
    }
    return out;
}

StrategyI strategy_II_to_I(const Graph& g, Vertex s, const StrategyII& strategy) {
    simulate_v2(g, s, strategy);  // validates
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (std::size_t r = 0; r < strategy.rounds.size(); ++r) {
        for (Vertex v : strategy.rounds[r]) {
            order.emplace_back(r, v);
        }
    }
    std::sort(order.begin(), order.end());
    StrategyI out;
    for (const auto& [round, v] : order) {
        out.moves.emplace_back(v);
    }
    return out;
}

namespace {

class GeneralBrancher {
public:
    GeneralBrancher(const Graph& g, std::int64_t k, BranchStats& stats)
        : g_(g), k_(k), stats_(stats), cells_(static_cast<std::size_t>(g.vertex_count()), Cell::Untouched),
          stamp_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    bool run(Vertex s) {
        cells_[static_cast<std::size_t>(s)] = Cell::Burning;
        std::vector<Vertex> open(g_.neighbors(s).begin(), g_.neighbors(s).end());
        return search(1, 1, 0, open);
    }

    StrategyII witness() const {
        StrategyII out{rounds_};
        while (!out.rounds.empty() && out.rounds.back().empty()) {
            out.rounds.pop_back();
        }
        return out;
    }

private:
    // open = N(B) \ P, sorted.
    bool search(std::int64_t round, std::int64_t burned, std::int64_t protected_count, const std::vector<Vertex>& open) {
        ++stats_.nodes;
        if (burned > k_) {
            return false;
        }
        const std::int64_t spare = round - protected_count;
        const auto r = static_cast<std::int64_t>(open.size());
        if (spare >= r) {
            rounds_.push_back(open);
            return true;
        }
        // spare >= 1 on every explored branch, so r >= 2 here.
        std::vector<std::size_t> pick;
        for (std::int64_t size = 0; size <= spare; ++size) {
            pick.resize(static_cast<std::size_t>(size));
            for (std::size_t j = 0; j < pick.size(); ++j) {
                pick[j] = j;
            }
            while (true) {
                if (try_subset(round, burned, protected_count, open, pick)) {
                    return true;
                }
                if (!advance(pick, open.size())) {
                    break;
                }
            }
        }
        return false;
    }

    static bool advance(std::vector<std::size_t>& pick, std::size_t n) {
        std::size_t m = pick.size();
        std::size_t j = m;
        while (j > 0) {
            --j;
            if (pick[j] < n - m + j) {
                ++pick[j];
                for (std::size_t q = j + 1; q < m; ++q) {
                    pick[q] = pick[q - 1] + 1;
                }
                return true;
            }
        }
        return false;
    }

    bool try_subset(std::int64_t round, std::int64_t burned, std::int64_t protected_count,
                    const std::vector<Vertex>& open, const std::vector<std::size_t>& pick) {
        std::vector<Vertex> chosen;
        std::vector<Vertex> lit;
        std::size_t next_pick = 0;
        for (std::size_t j = 0; j < open.size(); ++j) {
            if (next_pick < pick.size() && pick[next_pick] == j) {
                chosen.push_back(open[j]);
                ++next_pick;
            } else {
                lit.push_back(open[j]);
            }
        }
        for (Vertex v : chosen) {
            at(v) = Cell::Protected;
        }
        for (Vertex v : lit) {
            at(v) = Cell::Burning;
        }
        ++current_stamp_;
        std::vector<Vertex> next_open;
        for (Vertex u : lit) {
            for (Vertex w : g_.neighbors(u)) {
                auto uw = static_cast<std::size_t>(w);
                if (cells_[uw] == Cell::Untouched && stamp_[uw] != current_stamp_) {
                    stamp_[uw] = current_stamp_;
                    next_open.push_back(w);
                }
            }
        }
        std::sort(next_open.begin(), next_open.end());

        if (stats_.on_branch) {
            const auto alpha = [&](std::int64_t b, std::int64_t i, std::int64_t p) { return (k_ - b) + (i - p); };
            stats_.on_branch(alpha(burned, round, protected_count),
                             alpha(burned + static_cast<std::int64_t>(lit.size()), round + 1,
                                   protected_count + static_cast<std::int64_t>(chosen.size())),
                             static_cast<std::int64_t>(open.size()));
        }

        rounds_.push_back(chosen);
        bool ok = search(round + 1, burned + static_cast<std::int64_t>(lit.size()),
                         protected_count + static_cast<std::int64_t>(chosen.size()), next_open);
        if (!ok) {
            rounds_.pop_back();
            for (Vertex v : open) {
                at(v) = Cell::Untouched;
            }
        }
        return ok;
    }

    Cell& at(Vertex v) { return cells_[static_cast<std::size_t>(v)]; }

    const Graph& g_;
    std::int64_t k_;
    BranchStats& stats_;
    std::vector<Cell> cells_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t current_stamp_ = 0;
    std::vector<std::vector<Vertex>> rounds_;
};

}  // namespace

DecisionII save_all_but_k_general(const Graph& g, Vertex s, std::int64_t k, BranchStats* stats) {
    if (!g.contains(s)) {
        throw InvalidInput("ignition vertex " + std::to_string(s) + " is not a vertex");
    }
    BranchStats local;
    GeneralBrancher brancher(g, k, stats ? *stats : local);
    if (!brancher.run(s)) {
        return {false, std::nullopt};
    }
    return {true, brancher.witness()};
}

namespace {

using Mask = std::uint64_t;

// Exhaustive search over classic strategies on bitmask states. Every
// unburned, unprotected vertex is a candidate each round, plus passing.
class ExhaustiveSearch {
public:
    ExhaustiveSearch(const Graph& g, Vertex s, OracleOptions opts) : n_(g.vertex_count()) {
        if (!g.contains(s)) {
            throw InvalidInput("ignition vertex " + std::to_string(s) + " is not a vertex");
        }
        if (n_ > opts.max_vertices || n_ > 63) {
            throw InvalidInput("oracle size guard: " + std::to_string(n_) + " vertices exceeds limit " +
                               std::to_string(std::min(opts.max_vertices, 63)));
        }
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
            adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
        }
        all_ = n_ == 0 ? 0 : (n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1));
        start_ = Mask{1} << s;
    }

    Mask spread(Mask burned, Mask prot) const {
        Mask reach = 0;
        for (Mask b = burned; b; b &= b - 1) {
            reach |= adj_[static_cast<std::size_t>(std::countr_zero(b))];
        }
        return burned | (reach & ~prot);
    }

    Mask closure(Mask burned, Mask prot) const {
        while (true) {
            Mask next = spread(burned, prot);
            if (next == burned) {
                return burned;
            }
            burned = next;
        }
    }

    // budget < 0 means unlimited protections; value is the burned count.
    std::int64_t best_burned(Mask burned, Mask prot, std::int64_t budget) {
        if (spread(burned, prot) == burned) {
            return std::popcount(burned);
        }
        if (budget >= 0 && std::popcount(prot) >= budget) {
            return std::popcount(closure(burned, prot));
        }
        Key key{burned, prot};
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second.value;
        }
        Entry best{best_burned(spread(burned, prot), prot, budget), -1};
        for (Mask cand = all_ & ~burned & ~prot; cand; cand &= cand - 1) {
            int v = std::countr_zero(cand);
            Mask p2 = prot | (Mask{1} << v);
            std::int64_t value = best_burned(spread(burned, p2), p2, budget);
            if (value < best.value) {
                best = {value, v};
            }
        }
        memo_.emplace(key, best);
        return best.value;
    }

    StrategyI replay(std::int64_t budget) const {
        StrategyI out;
        Mask burned = start_, prot = 0;
        while (spread(burned, prot) != burned) {
            if (budget >= 0 && std::popcount(prot) >= budget) {
                break;
            }
            auto it = memo_.find(Key{burned, prot});
            int choice = it == memo_.end() ? -1 : it->second.choice;
            if (choice >= 0) {
                prot |= Mask{1} << choice;
                out.moves.emplace_back(choice);
            } else {
                out.moves.emplace_back(std::nullopt);
            }
            burned = spread(burned, prot);
        }
        while (!out.moves.empty() && !out.moves.back()) {
            out.moves.pop_back();
        }
        return out;
    }

    Mask start() const { return start_; }
    std::int32_t size() const { return n_; }

private:
    struct Key {
        Mask burned, prot;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<Mask>{}(k.burned * 0x9E3779B97F4A7C15ull ^ k.prot);
        }
    };
    struct Entry {
        std::int64_t value;
        int choice;
    };

    std::int32_t n_;
    std::vector<Mask> adj_;
    Mask all_ = 0;
    Mask start_ = 0;
    std::unordered_map<Key, Entry, KeyHash> memo_;
};

}  // namespace

BurnResult brute_force_min_burned(const Graph& g, Vertex s, OracleOptions opts) {
    ExhaustiveSearch search(g, s, opts);
    BurnResult out;
    out.burned = search.best_burned(search.start(), 0, -1);
    out.strategy = search.replay(-1);
    return out;
}

ProtectionResult brute_force_max_saved_protecting_k(const Graph& g, Vertex s, std::int64_t k, OracleOptions opts) {
    ExhaustiveSearch search(g, s, opts);
    const std::int64_t budget = std::max<std::int64_t>(k, 0);
    ProtectionResult out;
    out.saved = search.size() - search.best_burned(search.start(), 0, budget);
    out.strategy = search.replay(budget);
    return out;
}

}  // namespace firefighter
