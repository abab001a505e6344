#include "firefighter/tree_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace firefighter {

namespace {

// One column of the protection table: rows i = 0..depth, each 2^bits wide.
// Rows beyond depth(v) coincide with row depth(v) (every vertex of the root
// path is already forbidden), so they are not stored.
template <typename Value>
struct Column {
    int depth = 0;
    std::vector<Value> data;

    Value get(int bits, std::uint32_t chi, int i) const {
        return data[(static_cast<std::size_t>(std::min(i, depth)) << bits) | chi];
    }
};

class ProtectionTable {
public:
    ProtectionTable(const RootedTree& t, int bits) : tree_(t), bits_(bits) {
        for (Vertex v : t.preorder_sequence()) {
            if (t.depth(v) <= bits) {
                layer_.push_back(v);
            }
        }
    }

    int bits() const { return bits_; }
    const std::vector<Vertex>& layer() const { return layer_; }
    std::uint32_t full_mask() const { return bits_ == 0 ? 0u : ((1u << bits_) - 1u); }

    template <typename Value>
    Column<Value> root_column() const {
        return Column<Value>{0, std::vector<Value>(std::size_t{1} << bits_, Value{0})};
    }

    // A_v(chi, i) = max(A_l(chi, min(d-1, i)),
    //                   [chi(d) = 1 and d > i] * (r(v) + A_l(chi without d, d-1)))
    template <typename Value>
    Column<Value> next_column(const Column<Value>& prev, Vertex v) const {
        const int d = tree_.depth(v);
        const auto r = static_cast<Value>(tree_.subtree_size(v));
        const std::uint32_t bit = 1u << (d - 1);
        const std::size_t width = std::size_t{1} << bits_;
        Column<Value> col{d, std::vector<Value>(width * static_cast<std::size_t>(d + 1))};
        const Value* keep_row = prev.data.data() + (static_cast<std::size_t>(std::min(d - 1, prev.depth)) << bits_);
        for (int i = 0; i <= d; ++i) {
            const Value* skip_row = prev.data.data() + (static_cast<std::size_t>(std::min({d - 1, i, prev.depth})) << bits_);
            Value* out = col.data.data() + (static_cast<std::size_t>(i) << bits_);
            if (i >= d) {
                std::copy(skip_row, skip_row + width, out);
                continue;
            }
            for (std::uint32_t chi = 0; chi < width; ++chi) {
                Value best = skip_row[chi];
                if (chi & bit) {
                    Value take = static_cast<Value>(r + keep_row[chi ^ bit]);
                    if (take > best) {
                        best = take;
                    }
                }
                out[chi] = best;
            }
        }
        return col;
    }

private:
    const RootedTree& tree_;
    int bits_;
    std::vector<Vertex> layer_;
};

template <typename Value>
ProtectionResult solve_protection(const ProtectionTable& table, const RootedTree& t) {
    const auto& layer = table.layer();
    const int bits = table.bits();
    const std::size_t m = layer.size();
    const auto stride = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m))));

    // Forward pass, keeping every stride-th column as a checkpoint.
    std::vector<Column<Value>> checkpoints;
    Column<Value> current = table.template root_column<Value>();
    checkpoints.push_back(current);
    for (std::size_t p = 1; p < m; ++p) {
        current = table.next_column(current, layer[p]);
        if (p % stride == 0) {
            checkpoints.push_back(current);
        }
    }

    ProtectionResult result;
    std::uint32_t chi = table.full_mask();
    int i = 0;
    result.saved = static_cast<std::int64_t>(current.get(bits, chi, i));

    // Backward pass: re-derive one segment of columns at a time from its
    // checkpoint and replay the recurrence's choices right to left.
    std::vector<Column<Value>> segment;
    std::size_t segment_start = std::numeric_limits<std::size_t>::max();
    std::vector<Vertex> chosen;
    for (std::size_t p = m - 1; p >= 1; --p) {
        const std::size_t need = p - 1;
        const std::size_t start = (need / stride) * stride;
        if (start != segment_start) {
            segment.clear();
            segment.push_back(checkpoints[start / stride]);
            for (std::size_t q = start + 1; q < std::min(start + stride, m); ++q) {
                segment.push_back(table.next_column(segment.back(), layer[q]));
            }
            segment_start = start;
        }
        const Column<Value>& prev = segment[need - start];
        const Vertex v = layer[p];
        const int d = t.depth(v);
        const int row = std::min(i, d);
        const std::uint32_t bit = 1u << (d - 1);
        Value skip = prev.get(bits, chi, std::min(d - 1, row));
        bool protect = false;
        if (row < d && (chi & bit)) {
            Value take = static_cast<Value>(t.subtree_size(v) + prev.get(bits, chi ^ bit, d - 1));
            protect = take > skip;  // ties prefer leaving v unprotected
        }
        if (protect) {
            chosen.push_back(v);
            chi ^= bit;
            i = d - 1;
        } else {
            i = std::min(d - 1, row);
        }
    }

    int max_depth = 0;
    for (Vertex v : chosen) {
        max_depth = std::max(max_depth, t.depth(v));
    }
    result.strategy.moves.assign(static_cast<std::size_t>(max_depth), std::nullopt);
    for (Vertex v : chosen) {
        result.strategy.moves[static_cast<std::size_t>(t.depth(v) - 1)] = v;
    }
    return result;
}

int protection_bits(const RootedTree& t, std::int64_t k) {
    const std::int64_t bits = std::min<std::int64_t>(k, t.height());
    if (bits > kMaxProtectionBits) {
        throw InvalidInput("protection table needs " + std::to_string(bits) + " depth bits; limit is " +
                           std::to_string(kMaxProtectionBits));
    }
    return static_cast<int>(bits);
}

void check_table_size(const ProtectionTable& table, const RootedTree& t, std::size_t value_bytes) {
    const std::size_t m = table.layer().size();
    const auto stride = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m))));
    const std::size_t live_columns = (m + stride - 1) / std::max<std::size_t>(stride, 1) + stride + 1;
    int deepest = 0;
    for (Vertex v : table.layer()) {
        deepest = std::max(deepest, t.depth(v));
    }
    const double bytes = static_cast<double>(live_columns) * static_cast<double>(deepest + 1) *
                         std::ldexp(1.0, table.bits()) * static_cast<double>(value_bytes);
    if (bytes > static_cast<double>(kMaxProtectionTableBytes)) {
        throw InvalidInput("protection table for " + std::to_string(table.bits()) + " depth bits needs about " +
                           std::to_string(static_cast<long long>(bytes / (1 << 20))) + " MiB");
    }
}

bool branch_frontier(const RootedTree& t, const std::vector<Vertex>& frontier, std::int64_t budget,
                     std::vector<Vertex>& moves, BranchStats& stats) {
    ++stats.nodes;
    if (budget <= 0) {
        return false;
    }
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
        auto kids = t.children(u);
        next.insert(next.end(), kids.begin(), kids.end());
    }
    std::sort(next.begin(), next.end());
    if (next.size() <= 1) {
        moves.insert(moves.end(), next.begin(), next.end());
        return true;
    }
    const auto spread = static_cast<std::int64_t>(next.size()) - 1;
    if (budget < spread) {
        return false;
    }
    std::vector<Vertex> burning;
    burning.reserve(next.size() - 1);
    for (Vertex c : next) {
        burning.clear();
        std::copy_if(next.begin(), next.end(), std::back_inserter(burning), [c](Vertex w) { return w != c; });
        moves.push_back(c);
        if (stats.on_branch) {
            stats.on_branch(budget, budget - spread, spread);
        }
        if (branch_frontier(t, burning, budget - spread, moves, stats)) {
            return true;
        }
        moves.pop_back();
    }
    return false;
}

}  // namespace

ProtectionResult max_k_protection_tree(const RootedTree& t, std::int64_t k) {
    if (k <= 0 || t.vertex_count() <= 1) {
        return {};
    }
    ProtectionTable table(t, protection_bits(t, k));
    const bool narrow = t.vertex_count() <= std::numeric_limits<std::uint16_t>::max();
    check_table_size(table, t, narrow ? sizeof(std::uint16_t) : sizeof(std::uint32_t));
    if (narrow) {
        return solve_protection<std::uint16_t>(table, t);
    }
    return solve_protection<std::uint32_t>(table, t);
}

Decision saving_k_vertices_tree(const RootedTree& t, std::int64_t k) {
    if (k <= 0) {
        return {true, StrategyI{}};
    }
    if (k >= t.vertex_count()) {
        return {false, std::nullopt};  // the root always burns
    }
    if (t.height() >= k) {
        // The depth-1 ancestor of a deepest vertex heads a subtree of at
        // least height >= k vertices.
        auto order = t.preorder_sequence();
        Vertex deepest = *std::max_element(order.begin(), order.end(),
                                           [&](Vertex a, Vertex b) { return t.depth(a) < t.depth(b); });
        while (t.depth(deepest) > 1) {
            deepest = *t.parent(deepest);
        }
        return {true, StrategyI::from_vertices({deepest})};
    }
    for (std::int64_t kp = 1; kp <= k; ++kp) {
        auto res = max_k_protection_tree(t, kp);
        if (res.saved >= k) {
            return {true, std::move(res.strategy)};
        }
        if (kp >= t.height()) {
            break;  // deeper budgets add only inert bits
        }
    }
    return {false, std::nullopt};
}

std::int64_t exact_tree_budget(std::int64_t n) {
    auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(2 * n)));
    while (k * k < 2 * n) {
        ++k;
    }
    while (k > 0 && (k - 1) * (k - 1) >= 2 * n) {
        --k;
    }
    return k;
}

ProtectionResult exact_firefighter_tree(const RootedTree& t) {
    return max_k_protection_tree(t, exact_tree_budget(t.vertex_count()));
}

Decision save_all_but_k_tree(const RootedTree& t, std::int64_t k, BranchStats* stats) {
    BranchStats local;
    std::vector<Vertex> moves;
    bool yes = branch_frontier(t, {t.root()}, k, moves, stats ? *stats : local);
    if (!yes) {
        return {false, std::nullopt};
    }
    return {true, StrategyI::from_vertices(moves)};
}

DpDump dump_protection_table(const RootedTree& t, std::int64_t k) {
    DpDump dump;
    dump.bits = protection_bits(t, std::max<std::int64_t>(k, 0));
    ProtectionTable table(t, dump.bits);
    dump.columns = table.layer();
    const std::size_t width = std::size_t{1} << dump.bits;
    auto expand = [&](const Column<std::uint32_t>& col) {
        std::vector<std::int64_t> flat(width * static_cast<std::size_t>(dump.bits + 1));
        for (int i = 0; i <= dump.bits; ++i) {
            for (std::uint32_t chi = 0; chi < width; ++chi) {
                flat[static_cast<std::size_t>(i) * width + chi] = col.get(dump.bits, chi, i);
            }
        }
        return flat;
    };
    Column<std::uint32_t> col = table.root_column<std::uint32_t>();
    dump.values.push_back(expand(col));
    for (std::size_t p = 1; p < dump.columns.size(); ++p) {
        col = table.next_column(col, dump.columns[p]);
        dump.values.push_back(expand(col));
    }
    return dump;
}

}  // namespace firefighter
