#pragma once

// Isomorphism-invariant keys for colored boards. Each connected component is
// canonicalized by iterative color refinement plus backtracking over the
// finest partition, taking the lexicographically least adjacency encoding;
// component encodings are then sorted and concatenated. Isolated vertices
// beyond a configurable count fold into one representative, which collapses
// the infinite board to a finite state space.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "oramsey/graph.hpp"

namespace oramsey {

struct CanonicalForm {
    std::string key;
    std::vector<VertexId> labeling; // canonical index -> original vertex id
};

namespace detail {

// Dense matrix over a component's vertices. Cell values: 0 none, 1 red,
// 2 blue, 3 marked (used for move-orbit detection).
struct SmallGraph {
    int n = 0;
    std::vector<std::uint8_t> mat;

    explicit SmallGraph(int nn) : n(nn), mat(static_cast<std::size_t>(nn) * nn, 0) {}
    std::uint8_t at(int i, int j) const { return mat[static_cast<std::size_t>(i) * n + j]; }
    void set(int i, int j, std::uint8_t v) {
        mat[static_cast<std::size_t>(i) * n + j] = v;
        mat[static_cast<std::size_t>(j) * n + i] = v;
    }
};

class Canonicalizer {
public:
    explicit Canonicalizer(const SmallGraph& g) : g_(g) {}

    // Returns the least encoding and the vertex order realizing it.
    std::pair<std::vector<std::uint8_t>, std::vector<int>> run() {
        std::vector<int> cls(g_.n, 0);
        refine(cls);
        search(cls);
        return {best_, best_perm_};
    }

private:
    using Partition = std::vector<int>;

    void refine(Partition& cls) const {
        const int n = g_.n;
        std::vector<std::vector<std::pair<std::uint8_t, int>>> sig(n);
        while (true) {
            for (int v = 0; v < n; ++v) {
                sig[v].clear();
                for (int u = 0; u < n; ++u) {
                    if (u == v) continue;
                    std::uint8_t m = g_.at(v, u);
                    if (m != 0) sig[v].push_back({m, cls[u]});
                }
                std::sort(sig[v].begin(), sig[v].end());
            }
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                if (cls[a] != cls[b]) return cls[a] < cls[b];
                return sig[a] < sig[b];
            });
            Partition next(n);
            int id = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0) {
                    int a = order[i - 1], b = order[i];
                    if (cls[a] != cls[b] || sig[a] != sig[b]) ++id;
                }
                next[order[i]] = id;
            }
            if (next == cls) return;
            cls = next;
        }
    }

    bool discrete(const Partition& cls) const {
        std::vector<char> seen(g_.n, 0);
        for (int c : cls) {
            if (seen[c]) return false;
            seen[c] = 1;
        }
        return true;
    }

    void search(Partition cls) {
        if (discrete(cls)) {
            std::vector<int> perm(g_.n);
            for (int v = 0; v < g_.n; ++v) perm[cls[v]] = v;
            std::vector<std::uint8_t> enc;
            enc.reserve(static_cast<std::size_t>(g_.n) * (g_.n - 1) / 2);
            for (int i = 0; i < g_.n; ++i)
                for (int j = i + 1; j < g_.n; ++j) enc.push_back(g_.at(perm[i], perm[j]));
            if (best_perm_.empty() || enc < best_) {
                best_ = std::move(enc);
                best_perm_ = std::move(perm);
            }
            return;
        }
        // Split the smallest-id class of size >= 2 on every member.
        int target = -1;
        std::vector<int> count(g_.n, 0);
        for (int c : cls) ++count[c];
        for (int c = 0; c < g_.n; ++c)
            if (count[c] >= 2) {
                target = c;
                break;
            }
        for (int v = 0; v < g_.n; ++v) {
            if (cls[v] != target) continue;
            Partition next(g_.n);
            for (int w = 0; w < g_.n; ++w) next[w] = cls[w] * 2 + (w == v ? 0 : 1);
            refine(next);
            search(std::move(next));
        }
    }

    const SmallGraph& g_;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_perm_;
};

struct ComponentResult {
    std::string enc;
    std::vector<VertexId> order; // canonical position -> original vertex
};

inline ComponentResult canonicalize_component(const SmallGraph& g,
                                              const std::vector<VertexId>& locals) {
    auto [enc, perm] = Canonicalizer(g).run();
    ComponentResult r;
    r.enc.push_back(static_cast<char>(g.n & 0xff));
    r.enc.push_back(static_cast<char>((g.n >> 8) & 0xff));
    r.enc.append(enc.begin(), enc.end());
    r.order.reserve(g.n);
    for (int i = 0; i < g.n; ++i) r.order.push_back(locals[perm[i]]);
    return r;
}

// Shared worker: builds components of (g + optional marked edge) over the
// kept vertex set, canonicalizes each, sorts encodings.
inline CanonicalForm canonical_form_impl(const ColoredGraph& g,
                                         const std::vector<VertexId>& kept,
                                         bool marked, VertexId mu, VertexId mv) {
    const std::size_t total = g.vertex_count();
    std::vector<int> local(total, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) local[kept[i]] = static_cast<int>(i);

    // Union-find over kept vertices.
    std::vector<int> parent(kept.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& [e, c] : g.edges()) {
        (void)c;
        if (local[e.u] >= 0 && local[e.v] >= 0) unite(local[e.u], local[e.v]);
    }
    if (marked) unite(local[mu], local[mv]);

    std::vector<std::vector<VertexId>> comps;
    std::vector<int> comp_index(kept.size(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        int root = find(static_cast<int>(i));
        if (comp_index[root] == -1) {
            comp_index[root] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_index[root]].push_back(kept[i]);
    }

    std::vector<ComponentResult> results;
    results.reserve(comps.size());
    for (const auto& members : comps) {
        SmallGraph sg(static_cast<int>(members.size()));
        std::vector<int> pos(total, -1);
        for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
        for (const VertexId v : members)
            for (const auto& arc : g.neighbors(v)) {
                if (pos[arc.to] == -1) continue;
                sg.set(pos[v], pos[arc.to], arc.color == Color::Red ? 1 : 2);
            }
        if (marked && pos[mu] != -1 && pos[mv] != -1) sg.set(pos[mu], pos[mv], 3);
        results.push_back(canonicalize_component(sg, members));
    }
    std::sort(results.begin(), results.end(),
              [](const ComponentResult& a, const ComponentResult& b) { return a.enc < b.enc; });

    CanonicalForm form;
    form.key.push_back(static_cast<char>(results.size() & 0xff));
    form.key.push_back(static_cast<char>((results.size() >> 8) & 0xff));
    for (const auto& r : results) {
        form.key += r.enc;
        form.labeling.insert(form.labeling.end(), r.order.begin(), r.order.end());
    }
    return form;
}

} // namespace detail

// Canonical form of the board. Isolated vertices beyond `max_isolated` are
// folded into representatives (fresh vertices are interchangeable).
inline CanonicalForm canonical_form(const ColoredGraph& g, std::size_t max_isolated = 1) {
    std::vector<VertexId> kept;
    std::size_t isolated_kept = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_isolated(v)) {
            if (isolated_kept < max_isolated) {
                kept.push_back(v);
                ++isolated_kept;
            }
        } else {
            kept.push_back(v);
        }
    }
    return detail::canonical_form_impl(g, kept, false, 0, 0);
}

inline std::string canonical_key(const ColoredGraph& g, std::size_t max_isolated = 1) {
    return canonical_form(g, max_isolated).key;
}

// Key of the board with one candidate edge marked by a third color. Two
// candidate moves get equal keys exactly when a color-preserving automorphism
// maps one to the other. Endpoints must already exist in g (materialize fresh
// vertices on a copy first); isolated vertices other than the endpoints drop.
inline std::string canonical_key_with_marked_edge(const ColoredGraph& g, VertexId u, VertexId v) {
    std::vector<VertexId> kept;
    for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (!g.is_isolated(w) || w == u || w == v) kept.push_back(w);
    return detail::canonical_form_impl(g, kept, true, u, v).key;
}

inline std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

inline std::string from_hex(const std::string& hex) {
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) fail(ErrorCode::BadTableFile, "odd hex string");
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = val(hex[i]), lo = val(hex[i + 1]);
        if (hi < 0 || lo < 0) fail(ErrorCode::BadTableFile, "bad hex digit");
        out.push_back(static_cast<char>((hi << 4) | lo));
    }
    return out;
}

} // namespace oramsey
