#pragma once

// One Builder-vs-Painter game: alternation protocol, move legality, round
// counting, termination, trace recording and the line-based trace format.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oramsey/graph.hpp"

namespace oramsey {

struct GameConfig {
    std::size_t red_order = 4; // red target path order
    std::size_t blue_order = 2; // blue target path order (n = l+1)
    std::size_t budget = 1; // max rounds before BudgetExceeded

    bool valid() const { return red_order >= 2 && blue_order >= 2 && budget >= 1; }
};

enum class Verdict { Ongoing, RedWin, BlueWin, BudgetExceeded };

struct GameStatus {
    Verdict verdict = Verdict::Ongoing;
    std::size_t round = 0; // 1-based round of the win, for RedWin/BlueWin

    bool over() const { return verdict != Verdict::Ongoing; }
    bool operator==(const GameStatus& o) const {
        if (verdict != o.verdict) return false;
        if (verdict == Verdict::RedWin || verdict == Verdict::BlueWin) return round == o.round;
        return true;
    }
};

inline std::string status_to_string(const GameStatus& s) {
    switch (s.verdict) {
    case Verdict::Ongoing: return "Ongoing";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
    case Verdict::RedWin: return "RedWin " + std::to_string(s.round);
    case Verdict::BlueWin: return "BlueWin " + std::to_string(s.round);
    }
    return "?";
}

// RedWin takes precedence over BlueWin on simultaneous detection; targets are
// checked before the budget.
inline GameStatus status(const ColoredGraph& g, const GameConfig& cfg, std::size_t rounds_used) {
    if (has_path_of_order(g, Color::Red, cfg.red_order)) return {Verdict::RedWin, rounds_used};
    if (has_path_of_order(g, Color::Blue, cfg.blue_order)) return {Verdict::BlueWin, rounds_used};
    if (rounds_used >= cfg.budget) return {Verdict::BudgetExceeded, rounds_used};
    return {Verdict::Ongoing, rounds_used};
}

struct Round {
    std::size_t index = 0; // 1-based
    Edge edge;
    Color color = Color::Red;
};

struct GameTrace {
    GameConfig config;
    std::vector<Round> rounds;
    GameStatus status;
};

// Builder proposes one edge per round. Fresh vertices are requested by naming
// ids at or just past the current vertex count (at most two); the engine
// materializes them, so ids stay aligned with the monotone counter.
class BuilderStrategy {
public:
    virtual ~BuilderStrategy() = default;
    virtual Edge propose(const ColoredGraph& g) = 0;
    virtual void observe(const ColoredGraph& g, Edge e, Color c) {
        (void)g;
        (void)e;
        (void)c;
    }
};

class PainterStrategy {
public:
    virtual ~PainterStrategy() = default;
    virtual Color color(const ColoredGraph& g, Edge proposed) = 0;
};

inline std::string trace_to_text(const GameTrace& t);

namespace detail {

inline void materialize(ColoredGraph& g, Edge e) {
    VertexId hi = std::max(e.u, e.v);
    if (hi > g.vertex_count() + 1)
        fail(ErrorCode::IllegalBuilderMove,
             "vertex id " + std::to_string(hi) + " skips the fresh counter");
    g.ensure_vertex(hi);
}

} // namespace detail

inline GameTrace run_game(BuilderStrategy& builder, PainterStrategy& painter,
                          const GameConfig& cfg) {
    GameTrace trace;
    trace.config = cfg;
    ColoredGraph g;
    GameStatus st = status(g, cfg, 0);
    while (!st.over()) {
        Edge e = builder.propose(g);
        detail::materialize(g, e);
        if (e.u == e.v || g.has_edge(e.u, e.v)) {
            // A strategy bug, not a painter outcome: surface the partial trace.
            trace.status = status(g, cfg, trace.rounds.size());
            fail(ErrorCode::IllegalBuilderMove,
                 "illegal builder move " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                     " after round " + std::to_string(trace.rounds.size()) +
                     "; partial trace:\n" + trace_to_text(trace));
        }
        Color c = painter.color(g, e);
        g.add_edge(e.u, e.v, c);
        trace.rounds.push_back({trace.rounds.size() + 1, e, c});
        builder.observe(g, e, c);
        st = status(g, cfg, trace.rounds.size());
    }
    trace.status = st;
    return trace;
}

// Recomputes the status of a recorded game from the empty board.
inline GameStatus replay(const GameTrace& trace) {
    ColoredGraph g;
    GameStatus st = status(g, trace.config, 0);
    std::size_t expected = 1;
    for (const Round& r : trace.rounds) {
        if (r.index != expected)
            fail(ErrorCode::CorruptTrace, "round index " + std::to_string(r.index) +
                                              " out of order (expected " +
                                              std::to_string(expected) + ")");
        if (st.over()) fail(ErrorCode::CorruptTrace, "rounds recorded after game end");
        try {
            detail::materialize(g, r.edge);
            g.add_edge(r.edge.u, r.edge.v, r.color);
        } catch (const Error& e) {
            fail(ErrorCode::CorruptTrace, std::string("illegal round in trace: ") + e.what());
        }
        st = status(g, trace.config, expected);
        ++expected;
    }
    return st;
}

// Line format: header "red_order blue_order budget", one "index u v color"
// line per round, footer with the status.
inline std::string trace_to_text(const GameTrace& t) {
    std::ostringstream out;
    out << t.config.red_order << ' ' << t.config.blue_order << ' ' << t.config.budget << '\n';
    for (const Round& r : t.rounds)
        out << r.index << ' ' << r.edge.u << ' ' << r.edge.v << ' ' << color_name(r.color)
            << '\n';
    out << status_to_string(t.status) << '\n';
    return out.str();
}

inline GameTrace trace_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return line;
        }
        return std::nullopt;
    };

    GameTrace t;
    auto header = next_line();
    if (!header) fail(ErrorCode::CorruptTrace, "empty trace");
    {
        std::istringstream h(*header);
        if (!(h >> t.config.red_order >> t.config.blue_order >> t.config.budget))
            fail(ErrorCode::CorruptTrace, "bad header: " + *header);
    }

    std::vector<std::string> body;
    while (auto l = next_line()) body.push_back(*l);
    if (body.empty()) fail(ErrorCode::CorruptTrace, "missing status footer");

    {
        std::istringstream f(body.back());
        std::string verdict;
        f >> verdict;
        if (verdict == "Ongoing") t.status = {Verdict::Ongoing, 0};
        else if (verdict == "BudgetExceeded") t.status = {Verdict::BudgetExceeded, 0};
        else if (verdict == "RedWin" || verdict == "BlueWin") {
            std::size_t round = 0;
            if (!(f >> round)) fail(ErrorCode::CorruptTrace, "missing win round");
            t.status = {verdict == "RedWin" ? Verdict::RedWin : Verdict::BlueWin, round};
        } else {
            fail(ErrorCode::CorruptTrace, "bad status: " + body.back());
        }
        body.pop_back();
    }

    for (const std::string& l : body) {
        std::istringstream r(l);
        std::size_t index = 0;
        VertexId u = 0, v = 0;
        std::string color;
        if (!(r >> index >> u >> v >> color)) fail(ErrorCode::CorruptTrace, "bad round: " + l);
        auto c = color_from_name(color);
        if (!c) fail(ErrorCode::CorruptTrace, "bad color: " + color);
        t.rounds.push_back({index, Edge(u, v), *c});
    }
    return t;
}

} // namespace oramsey
