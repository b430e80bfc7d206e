#pragma once

// Graphviz export of a recorded game: blue edges solid, red edges dashed,
// every edge labeled with its round index.

#include <set>
#include <sstream>
#include <string>

#include "oramsey/game.hpp"

namespace oramsey {

inline std::string export_dot(const GameTrace& t) {
    GameStatus st = replay(t); // validates the trace
    if (!(st == t.status)) fail(ErrorCode::CorruptTrace, "trace status does not replay");
    std::ostringstream out;
    out << "graph trace {\n";
    out << "  // " << t.config.red_order << "/" << t.config.blue_order << " game, budget "
        << t.config.budget << ", " << status_to_string(t.status) << "\n";
    std::set<VertexId> vertices;
    for (const Round& r : t.rounds) {
        vertices.insert(r.edge.u);
        vertices.insert(r.edge.v);
    }
    for (VertexId v : vertices) out << "  v" << v << ";\n";
    for (const Round& r : t.rounds) {
        bool blue = r.color == Color::Blue;
        out << "  v" << r.edge.u << " -- v" << r.edge.v << " [color=" << (blue ? "blue" : "red")
            << ", style=" << (blue ? "solid" : "dashed") << ", label=\"" << r.index << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace oramsey
