#pragma once

// Exact game-tree search over isomorphism classes: computes small online
// Ramsey numbers from scratch and extracts reply-closed Builder strategy
// tables for them. Ground truth for everything the constructive Builder
// cannot certify by itself.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oramsey/canonical.hpp"
#include "oramsey/game.hpp"
#include "oramsey/strategy_table.hpp"

namespace oramsey {

// One representative per orbit of legal new edges under color-preserving
// automorphisms: existing-existing pairs first, then fresh-existing, then the
// single fresh-fresh move. Orbits are detected by marking the candidate edge
// with a third color and comparing canonical keys.
inline std::vector<Edge> builder_moves_up_to_iso(const ColoredGraph& g) {
    std::vector<Edge> moves;
    std::unordered_map<std::string, char> seen;
    auto consider = [&](VertexId u, VertexId v) {
        ColoredGraph h = g;
        h.ensure_vertex(std::max(u, v));
        std::string key = canonical_key_with_marked_edge(h, u, v);
        if (seen.emplace(std::move(key), 1).second) moves.push_back(Edge(u, v));
    };
    const VertexId n = static_cast<VertexId>(g.vertex_count());
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) consider(u, v);
    for (VertexId u = 0; u < n; ++u) consider(u, n);
    consider(n, n + 1);
    return moves;
}

struct SolverOptions {
    std::size_t max_budget = 14;
    std::size_t max_memo_entries = 40'000'000;
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    bool use_memo = true; // disable on tiny instances to cross-check values
};

struct SolveResult {
    std::optional<std::size_t> value; // empty: no win within max_budget
    std::uint64_t nodes_expanded = 0;
    std::optional<StrategyTable> table;
};

class Solver {
public:
    Solver(std::size_t red_order, std::size_t blue_order, SolverOptions opts = {})
        : m_(red_order), n_(blue_order), opts_(opts) {
        if (m_ < 2 || n_ < 2) fail(ErrorCode::TargetTooSmall, "targets must have order >= 2");
        if (opts_.max_budget > 14)
            fail(ErrorCode::BudgetTooLarge, "budget beyond the supported state space");
    }

    // Least budget with a winning Builder strategy, by iterative deepening.
    SolveResult solve(bool extract_table = false) {
        SolveResult result;
        ColoredGraph empty;
        for (std::size_t b = 1; b <= opts_.max_budget; ++b) {
            if (win_within(empty, b)) {
                result.value = b;
                break;
            }
        }
        result.nodes_expanded = nodes_;
        if (result.value && extract_table) {
            result.table = extract(*result.value);
            verify_table(*result.table);
        }
        return result;
    }

    // Minimum extra rounds Builder needs from this position, up to `cap`.
    std::optional<std::size_t> rounds_to_win(const ColoredGraph& g, std::size_t cap) {
        if (terminal(g)) return 0;
        for (std::size_t b = 1; b <= cap; ++b)
            if (win_within(g, b)) return b;
        return std::nullopt;
    }

    std::uint64_t nodes_expanded() const { return nodes_; }

    // Exhaustive replay of a table against every Painter reply sequence.
    void verify_table(const StrategyTable& table) const {
        ColoredGraph empty;
        verify_walk(table, empty, 0);
    }

private:
    struct Bound {
        std::size_t win_at = std::numeric_limits<std::size_t>::max(); // min b known winning
        std::size_t lose_at = 0; // max b known losing
    };

    bool terminal(const ColoredGraph& g) const {
        return has_path_of_order(g, Color::Red, m_) || has_path_of_order(g, Color::Blue, n_);
    }

    // Upper bound on any blue path order reachable with `extra` more blue
    // edges: the largest extra+1 blue-component vertex counts, with fresh
    // singletons filling the tail.
    std::size_t max_blue_reach(const ColoredGraph& g, std::size_t extra) const {
        std::vector<std::size_t> sizes;
        std::vector<char> seen(g.vertex_count(), 0);
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (seen[s]) continue;
            std::size_t size = 0;
            std::vector<VertexId> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                VertexId x = stack.back();
                stack.pop_back();
                ++size;
                for (const auto& arc : g.neighbors(x)) {
                    if (arc.color != Color::Blue || seen[arc.to]) continue;
                    seen[arc.to] = 1;
                    stack.push_back(arc.to);
                }
            }
            sizes.push_back(size);
        }
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        std::size_t reach = 0;
        for (std::size_t i = 0; i < extra + 1; ++i) reach += i < sizes.size() ? sizes[i] : 1;
        return reach;
    }

    bool win_within(const ColoredGraph& g, std::size_t b) {
        if (b == 0) return false;
        const std::string key = canonical_key(g, 0);
        if (opts_.use_memo) {
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                if (b >= it->second.win_at) return true;
                if (b <= it->second.lose_at) return false;
            }
        }
        ++nodes_;
        if (nodes_ > opts_.max_nodes) fail(ErrorCode::StateTooLarge, "node cap exceeded");
        if (memo_.size() > opts_.max_memo_entries)
            fail(ErrorCode::StateTooLarge, "transposition table cap exceeded");

        bool won = false;
        if (max_blue_reach(g, b) < n_) {
            won = false; // Painter survives by coloring everything blue
        } else {
            for (const Edge& e : builder_moves_up_to_iso(g)) {
                bool move_wins = true;
                for (Color c : {Color::Red, Color::Blue}) {
                    ColoredGraph child = g;
                    child.ensure_vertex(std::max(e.u, e.v));
                    child.add_edge(e.u, e.v, c);
                    bool child_won =
                        c == Color::Red
                            ? has_path_of_order(child, Color::Red, m_)
                            : has_path_of_order(child, Color::Blue, n_);
                    if (!child_won) child_won = win_within(child, b - 1);
                    if (!child_won) {
                        move_wins = false;
                        break;
                    }
                }
                if (move_wins) {
                    won = true;
                    break;
                }
            }
        }

        if (opts_.use_memo) {
            Bound& bound = memo_[key];
            if (won) bound.win_at = std::min(bound.win_at, b);
            else bound.lose_at = std::max(bound.lose_at, b);
        }
        return won;
    }

    // First winning move in enumeration order, for table extraction.
    std::optional<Edge> winning_move(const ColoredGraph& g, std::size_t b) {
        for (const Edge& e : builder_moves_up_to_iso(g)) {
            bool move_wins = true;
            for (Color c : {Color::Red, Color::Blue}) {
                ColoredGraph child = g;
                child.ensure_vertex(std::max(e.u, e.v));
                child.add_edge(e.u, e.v, c);
                if (!terminal(child) && !win_within(child, b - 1)) {
                    move_wins = false;
                    break;
                }
            }
            if (move_wins) return e;
        }
        return std::nullopt;
    }

    StrategyTable extract(std::size_t value) {
        StrategyTable table;
        table.red_order = m_;
        table.blue_order = n_;
        table.value = value;
        ColoredGraph empty;
        extract_walk(table, empty, value);
        return table;
    }

    void extract_walk(StrategyTable& table, const ColoredGraph& g, std::size_t remaining) {
        CanonicalForm form = canonical_form(g, 0);
        if (table.entries.count(form.key)) return;
        auto move = winning_move(g, remaining);
        if (!move)
            fail(ErrorCode::PlanDesync, "extraction reached a state with no winning move");
        table.entries[form.key] = encode_move(form, g, *move);
        for (Color c : {Color::Red, Color::Blue}) {
            ColoredGraph child = g;
            child.ensure_vertex(std::max(move->u, move->v));
            child.add_edge(move->u, move->v, c);
            if (!terminal(child)) extract_walk(table, child, remaining - 1);
        }
    }

    TableMove encode_move(const CanonicalForm& form, const ColoredGraph& g, Edge e) const {
        const int nv = static_cast<int>(form.labeling.size());
        std::vector<int> inverse(g.vertex_count(), -1);
        for (int i = 0; i < nv; ++i) inverse[form.labeling[i]] = i;
        int fresh = nv;
        auto idx = [&](VertexId v) {
            if (v < g.vertex_count() && inverse[v] >= 0) return inverse[v];
            return fresh++;
        };
        int a = idx(e.u);
        int b = idx(e.v);
        if (a > b) std::swap(a, b);
        return {a, b};
    }

    void verify_walk(const StrategyTable& table, const ColoredGraph& g,
                     std::size_t depth) const {
        if (depth > table.value)
            fail(ErrorCode::ContractViolation, "table exceeded its declared depth");
        Edge e = apply_table_move(table, g);
        for (Color c : {Color::Red, Color::Blue}) {
            ColoredGraph child = g;
            child.ensure_vertex(std::max(e.u, e.v));
            if (child.has_edge(e.u, e.v))
                fail(ErrorCode::ContractViolation, "table proposed an existing edge");
            child.add_edge(e.u, e.v, c);
            if (terminal(child)) {
                continue;
            }
            if (depth + 1 >= table.value)
                fail(ErrorCode::ContractViolation, "painter reply escapes the table depth");
            verify_walk(table, child, depth + 1);
        }
    }

    std::size_t m_;
    std::size_t n_;
    SolverOptions opts_;
    std::unordered_map<std::string, Bound> memo_;
    std::uint64_t nodes_ = 0;
};

inline SolveResult solve_value(std::size_t m, std::size_t n, std::size_t max_budget,
                               bool extract_table = false, SolverOptions opts = {}) {
    opts.max_budget = max_budget;
    Solver solver(m, n, opts);
    return solver.solve(extract_table);
}

inline StrategyTable extract_strategy(std::size_t m, std::size_t n, std::size_t max_budget,
                                      SolverOptions opts = {}) {
    opts.max_budget = max_budget;
    Solver solver(m, n, opts);
    SolveResult r = solver.solve(true);
    if (!r.value || !r.table)
        fail(ErrorCode::BudgetTooLarge, "no winning strategy within the budget");
    return *r.table;
}

// Optimal Painter backed by the solver's value function: picks the color
// maximizing Builder's remaining rounds to win, preferring Red on ties.
class MinimaxPainter : public PainterStrategy {
public:
    explicit MinimaxPainter(GameConfig cfg) : cfg_(cfg), solver_(cfg.red_order, cfg.blue_order) {
        if (cfg.blue_order > 7)
            fail(ErrorCode::StateTooLarge, "minimax painter supports blue targets up to P7");
    }

    Color color(const ColoredGraph& g, Edge proposed) override {
        std::size_t cap = cfg_.budget;
        std::size_t best_rounds = 0;
        Color best = Color::Red;
        bool first = true;
        for (Color c : {Color::Red, Color::Blue}) {
            ColoredGraph child = g;
            child.ensure_vertex(std::max(proposed.u, proposed.v));
            child.add_edge(proposed.u, proposed.v, c);
            auto rounds = solver_.rounds_to_win(child, cap);
            std::size_t score = rounds ? *rounds : cap + 1; // surviving the cap is best
            if (first || score > best_rounds) {
                best_rounds = score;
                best = c;
                first = false;
            }
        }
        return best;
    }

private:
    GameConfig cfg_;
    Solver solver_;
};

} // namespace oramsey
