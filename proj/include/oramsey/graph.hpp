#pragma once

// Two-colored board state for the Builder/Painter game, plus the structural
// queries the strategies and the solver rely on: red-P4 and red-cycle threat
// detection and exact longest blue path.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oramsey/errors.hpp"

namespace oramsey {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

inline std::optional<Color> color_from_name(const std::string& s) {
    if (s == "red" || s == "r") return Color::Red;
    if (s == "blue" || s == "b") return Color::Blue;
    return std::nullopt;
}

using VertexId = std::uint32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

// Simple graph with a fixed color per drawn edge. Vertices come from a
// monotone counter; edges are append-only. Copying the value is the way to
// branch a game state.
class ColoredGraph {
public:
    struct Arc {
        VertexId to;
        Color color;
    };

    ColoredGraph() = default;

    VertexId add_vertex() {
        adj_.emplace_back();
        return static_cast<VertexId>(adj_.size() - 1);
    }

    // Materializes vertices up to and including `v`.
    void ensure_vertex(VertexId v) {
        while (adj_.size() <= v) adj_.emplace_back();
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(VertexId v) const { return v < adj_.size(); }

    bool has_edge(VertexId u, VertexId v) const {
        if (!has_vertex(u) || !has_vertex(v)) return false;
        const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        VertexId other = (&a == &adj_[u]) ? v : u;
        for (const Arc& arc : a)
            if (arc.to == other) return true;
        return false;
    }

    std::optional<Color> edge_color(VertexId u, VertexId v) const {
        if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
        for (const Arc& arc : adj_[u])
            if (arc.to == v) return arc.color;
        return std::nullopt;
    }

    void add_edge(VertexId u, VertexId v, Color c) {
        if (u == v) fail(ErrorCode::LoopEdge, "self-loop " + std::to_string(u));
        if (!has_vertex(u) || !has_vertex(v))
            fail(ErrorCode::UnknownVertex,
                 "edge endpoint not allocated: " + std::to_string(u) + "," + std::to_string(v));
        if (has_edge(u, v))
            fail(ErrorCode::DuplicateEdge,
                 "edge already drawn: " + std::to_string(u) + "," + std::to_string(v));
        adj_[u].push_back({v, c});
        adj_[v].push_back({u, c});
        edges_.push_back({Edge(u, v), c});
        ++edge_count_;
    }

    // Value-semantic form: leaves *this untouched.
    ColoredGraph with_edge(VertexId u, VertexId v, Color c) const {
        ColoredGraph g = *this;
        g.add_edge(u, v, c);
        return g;
    }

    const std::vector<Arc>& neighbors(VertexId v) const { return adj_[v]; }

    // Edges in draw order with their colors.
    const std::vector<std::pair<Edge, Color>>& edges() const { return edges_; }

    std::size_t degree(VertexId v, Color c) const {
        std::size_t d = 0;
        for (const Arc& a : adj_[v])
            if (a.color == c) ++d;
        return d;
    }

    bool is_isolated(VertexId v) const { return adj_[v].empty(); }

private:
    std::vector<std::vector<Arc>> adj_;
    std::vector<std::pair<Edge, Color>> edges_;
    std::size_t edge_count_ = 0;
};

namespace detail {

// Exhaustive longest-path search restricted to one color. Boards stay within
// a couple of hundred vertices, so exact DFS is affordable; blue subgraphs
// produced by the strategies are forests, which the caller handles separately.
class MonochromePaths {
public:
    MonochromePaths(const ColoredGraph& g, Color c) : g_(g), color_(c) {}

    bool has_path_of_order(std::size_t m) const {
        if (m == 0) return true;
        if (m == 1) return g_.vertex_count() > 0;
        if (m == 2) {
            for (VertexId v = 0; v < g_.vertex_count(); ++v)
                if (g_.degree(v, color_) > 0) return true;
            return false;
        }
        std::vector<char> used(g_.vertex_count(), 0);
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (g_.degree(v, color_) == 0) continue;
            used[v] = 1;
            if (dfs_exists(v, 1, m, used)) return true;
            used[v] = 0;
        }
        return false;
    }

    std::pair<std::size_t, std::vector<VertexId>> longest_path() const {
        if (g_.vertex_count() == 0) return {0, {}};
        best_.clear();
        best_.push_back(0);
        std::vector<char> used(g_.vertex_count(), 0);
        std::vector<VertexId> cur;
        comp_size_ = component_sizes();
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (comp_size_[v] <= best_.size()) continue;
            cur.clear();
            cur.push_back(v);
            used[v] = 1;
            dfs_longest(v, cur, used);
            used[v] = 0;
        }
        return {best_.size(), best_};
    }

private:
    bool dfs_exists(VertexId v, std::size_t len, std::size_t m, std::vector<char>& used) const {
        if (len == m) return true;
        for (const auto& arc : g_.neighbors(v)) {
            if (arc.color != color_ || used[arc.to]) continue;
            used[arc.to] = 1;
            if (dfs_exists(arc.to, len + 1, m, used)) return true;
            used[arc.to] = 0;
        }
        return false;
    }

    void dfs_longest(VertexId v, std::vector<VertexId>& cur, std::vector<char>& used) const {
        if (cur.size() > best_.size()) best_ = cur;
        for (const auto& arc : g_.neighbors(v)) {
            if (arc.color != color_ || used[arc.to]) continue;
            used[arc.to] = 1;
            cur.push_back(arc.to);
            dfs_longest(arc.to, cur, used);
            cur.pop_back();
            used[arc.to] = 0;
        }
    }

    std::vector<std::size_t> component_sizes() const {
        std::vector<std::size_t> comp(g_.vertex_count(), 0);
        std::vector<int> id(g_.vertex_count(), -1);
        std::vector<VertexId> stack;
        int next = 0;
        std::vector<std::size_t> sizes;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (id[v] != -1) continue;
            stack.push_back(v);
            id[v] = next;
            std::size_t size = 0;
            while (!stack.empty()) {
                VertexId x = stack.back();
                stack.pop_back();
                ++size;
                for (const auto& arc : g_.neighbors(x)) {
                    if (arc.color != color_ || id[arc.to] != -1) continue;
                    id[arc.to] = next;
                    stack.push_back(arc.to);
                }
            }
            sizes.push_back(size);
            ++next;
        }
        for (VertexId v = 0; v < g_.vertex_count(); ++v) comp[v] = sizes[id[v]];
        return comp;
    }

    const ColoredGraph& g_;
    Color color_;
    mutable std::vector<VertexId> best_;
    mutable std::vector<std::size_t> comp_size_;
};

// Longest path in a forest via the classic two-sweep farthest-vertex walk,
// done per component. Ties resolve toward smaller vertex ids so witnesses are
// deterministic. Returns nullopt if the subgraph of that color has a cycle.
inline std::optional<std::pair<std::size_t, std::vector<VertexId>>>
forest_longest_path(const ColoredGraph& g, Color color) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return std::pair<std::size_t, std::vector<VertexId>>{0, {}};

    // Cycle check: per component, edges == vertices - 1.
    std::vector<int> comp(n, -1);
    std::vector<VertexId> order;
    int ncomp = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::size_t vs = 0, es = 0;
        order.clear();
        order.push_back(s);
        comp[s] = ncomp;
        while (!order.empty()) {
            VertexId x = order.back();
            order.pop_back();
            ++vs;
            for (const auto& arc : g.neighbors(x)) {
                if (arc.color != color) continue;
                ++es;
                if (comp[arc.to] == -1) {
                    comp[arc.to] = ncomp;
                    order.push_back(arc.to);
                }
            }
        }
        if (es / 2 != vs - 1) return std::nullopt;
        ++ncomp;
    }

    auto farthest = [&](VertexId s) {
        std::vector<int> par(n, -1);
        std::vector<int> dist(n, -1);
        std::vector<VertexId> queue{s};
        dist[s] = 0;
        std::size_t head = 0;
        VertexId best = s;
        while (head < queue.size()) {
            VertexId x = queue[head++];
            if (dist[x] > dist[best] || (dist[x] == dist[best] && x < best)) best = x;
            for (const auto& arc : g.neighbors(x)) {
                if (arc.color != color || dist[arc.to] != -1) continue;
                dist[arc.to] = dist[x] + 1;
                par[arc.to] = static_cast<int>(x);
                queue.push_back(arc.to);
            }
        }
        return std::make_tuple(best, par);
    };

    std::vector<char> seen(n, 0);
    std::size_t best_len = 0;
    std::vector<VertexId> best_path;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        for (VertexId v = 0; v < n; ++v)
            if (comp[v] == comp[s]) seen[v] = 1;
        auto [a, par_unused] = farthest(s);
        auto [b, par] = farthest(a);
        std::vector<VertexId> path;
        for (int x = static_cast<int>(b); x != -1; x = par[x]) path.push_back(static_cast<VertexId>(x));
        if (path.size() > best_len) {
            best_len = path.size();
            best_path = path;
        }
    }
    return std::make_pair(best_len, best_path);
}

} // namespace detail

// True iff the subgraph of `c`-colored edges contains a simple path on m vertices.
inline bool has_path_of_order(const ColoredGraph& g, Color c, std::size_t m) {
    return detail::MonochromePaths(g, c).has_path_of_order(m);
}

inline bool has_red_path_of_order(const ColoredGraph& g, std::size_t m) {
    return has_path_of_order(g, Color::Red, m);
}

// Order and witness of the longest blue path. Order 0 on an empty board,
// 1 when vertices exist but no blue edge touches them.
inline std::pair<std::size_t, std::vector<VertexId>> longest_blue_path(const ColoredGraph& g) {
    if (auto fast = detail::forest_longest_path(g, Color::Blue)) return *fast;
    return detail::MonochromePaths(g, Color::Blue).longest_path();
}

namespace detail {

inline void check_proposed_edge(const ColoredGraph& g, VertexId u, VertexId v) {
    if (u == v) fail(ErrorCode::LoopEdge, "self-loop");
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorCode::UnknownVertex, "unknown endpoint");
    if (g.has_edge(u, v)) fail(ErrorCode::DuplicateEdge, "edge exists");
}

} // namespace detail

// True iff coloring the new edge (u,v) red completes a red path on 4 vertices.
inline bool would_create_red_p4(const ColoredGraph& g, VertexId u, VertexId v) {
    detail::check_proposed_edge(g, u, v);
    auto red_neighbors = [&](VertexId x) {
        std::vector<VertexId> out;
        for (const auto& arc : g.neighbors(x))
            if (arc.color == Color::Red) out.push_back(arc.to);
        return out;
    };
    auto ru = red_neighbors(u);
    auto rv = red_neighbors(v);
    // (u,v) as middle edge: a-u-v-b with a,b distinct.
    for (VertexId a : ru) {
        if (a == v) continue;
        for (VertexId b : rv) {
            if (b == u || b == a) continue;
            return true;
        }
    }
    // (u,v) as end edge: u-v-x-y and v-u-x-y.
    auto extends_two = [&](VertexId from, VertexId other) {
        for (const auto& arc : g.neighbors(from)) {
            if (arc.color != Color::Red || arc.to == other) continue;
            for (const auto& arc2 : g.neighbors(arc.to)) {
                if (arc2.color != Color::Red) continue;
                if (arc2.to == from || arc2.to == other) continue;
                return true;
            }
        }
        return false;
    };
    if (extends_two(v, u)) return true;
    if (extends_two(u, v)) return true;
    return false;
}

// True iff u and v already lie in the same red connected component.
inline bool would_create_red_cycle(const ColoredGraph& g, VertexId u, VertexId v) {
    detail::check_proposed_edge(g, u, v);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        if (x == v) return true;
        for (const auto& arc : g.neighbors(x)) {
            if (arc.color != Color::Red || seen[arc.to]) continue;
            seen[arc.to] = 1;
            stack.push_back(arc.to);
        }
    }
    return false;
}

// Every red component must be a star when the blocking painter is in play.
inline bool red_subgraph_is_star_forest(const ColoredGraph& g) {
    // A component is a star iff it has no path on 4 vertices and no cycle.
    // Equivalent local check: every red edge has at most one endpoint of
    // red-degree > 1, and no red cycle exists.
    std::vector<int> comp(g.vertex_count(), -1);
    int ncomp = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1 || g.degree(s, Color::Red) == 0) continue;
        std::size_t vs = 0, es = 0;
        std::vector<VertexId> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            ++vs;
            for (const auto& arc : g.neighbors(x)) {
                if (arc.color != Color::Red) continue;
                ++es;
                if (comp[arc.to] == -1) {
                    comp[arc.to] = ncomp;
                    stack.push_back(arc.to);
                }
            }
        }
        if (es / 2 != vs - 1) return false; // red cycle
        ++ncomp;
    }
    for (const auto& [e, c] : g.edges()) {
        if (c != Color::Red) continue;
        if (g.degree(e.u, Color::Red) > 1 && g.degree(e.v, Color::Red) > 1) return false;
    }
    return true;
}

} // namespace oramsey
