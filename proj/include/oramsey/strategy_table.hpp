#pragma once

// Reply-closed Builder strategy tables keyed by canonical board state. A
// table certifies a win within `value` rounds: every state reachable by
// following it has an entry until the game ends. Shared between the exact
// solver (producer) and the small-base Builder (consumer).

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "oramsey/canonical.hpp"
#include "oramsey/graph.hpp"

namespace oramsey {

// Endpoints in canonical index space; indices at or past the state's vertex
// count denote fresh vertices.
struct TableMove {
    int a = 0;
    int b = 0;
};

struct StrategyTable {
    std::size_t red_order = 0;
    std::size_t blue_order = 0;
    std::size_t value = 0;
    std::unordered_map<std::string, TableMove> entries;
};

// Resolves a table entry against a concrete board. Fresh indices map to the
// monotone counter so the engine can materialize them.
inline Edge apply_table_move(const StrategyTable& table, const ColoredGraph& board) {
    CanonicalForm form = canonical_form(board);
    auto it = table.entries.find(form.key);
    if (it == table.entries.end())
        fail(ErrorCode::PlanDesync, "state missing from strategy table");
    const int nv = static_cast<int>(form.labeling.size());
    int fresh_used = 0;
    auto resolve = [&](int idx) -> VertexId {
        if (idx < nv) return form.labeling[idx];
        return static_cast<VertexId>(board.vertex_count() + fresh_used++);
    };
    VertexId u = resolve(it->second.a);
    VertexId v = resolve(it->second.b);
    return Edge(u, v);
}

inline std::string table_to_text(const StrategyTable& t) {
    std::ostringstream out;
    out << "oramsey-table 1\n";
    out << "m " << t.red_order << "\n";
    out << "n " << t.blue_order << "\n";
    out << "value " << t.value << "\n";
    out << "entries " << t.entries.size() << "\n";
    // Sorted for reproducible files.
    std::vector<std::pair<std::string, TableMove>> sorted(t.entries.begin(), t.entries.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [key, mv] : sorted)
        out << to_hex(key) << " " << mv.a << " " << mv.b << "\n";
    return out.str();
}

inline StrategyTable table_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "oramsey-table" || version != 1)
        fail(ErrorCode::BadTableFile, "bad table header");
    StrategyTable t;
    std::string tag;
    std::size_t count = 0;
    auto expect = [&](const char* name, std::size_t& into) {
        if (!(in >> tag >> into) || tag != name)
            fail(ErrorCode::BadTableFile, std::string("expected field ") + name);
    };
    expect("m", t.red_order);
    expect("n", t.blue_order);
    expect("value", t.value);
    expect("entries", count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string hex;
        TableMove mv;
        if (!(in >> hex >> mv.a >> mv.b)) fail(ErrorCode::BadTableFile, "truncated table");
        t.entries[from_hex(hex)] = mv;
    }
    return t;
}

inline void save_table(const StrategyTable& t, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::BadTableFile, "cannot write " + path);
    f << table_to_text(t);
}

inline StrategyTable load_table(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::BadTableFile, "cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return table_from_text(buf.str());
}

} // namespace oramsey
