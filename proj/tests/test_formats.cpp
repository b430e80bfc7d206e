#include "doctest.h"

#include "oramsey/builder.hpp"
#include "oramsey/dot.hpp"
#include "oramsey/painters.hpp"

using namespace oramsey;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("dot export of a one-round trace") {
    GameTrace t;
    t.config = {4, 2, 3};
    t.rounds = {{1, Edge(0, 1), Color::Blue}};
    t.status = {Verdict::BlueWin, 1};
    std::string dot = export_dot(t);
    CHECK(count_occurrences(dot, ";\n") >= 3);
    CHECK(count_occurrences(dot, " -- ") == 1);
    CHECK(dot.find("v0;") != std::string::npos);
    CHECK(dot.find("v1;") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
    CHECK(dot.find("style=solid") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
}

TEST_CASE("dot export styles red dashed and labels rounds") {
    // The five rounds that build one G7: an rr unit plus two forced chords.
    GameTrace t;
    t.config = {4, 100, 13}; // targets out of reach; the snippet replays Ongoing
    t.rounds = {{1, Edge(0, 1), Color::Red},
                {2, Edge(1, 2), Color::Red},
                {3, Edge(2, 3), Color::Blue},
                {4, Edge(1, 4), Color::Blue},
                {5, Edge(3, 4), Color::Blue}};
    t.status = replay(t);
    std::string dot = export_dot(t);
    CHECK(count_occurrences(dot, " -- ") == 5);
    CHECK(count_occurrences(dot, "style=dashed") == 2); // the red P3 of the unit
    CHECK(count_occurrences(dot, "style=solid") == 3);
    CHECK(dot.find("label=\"5\"") != std::string::npos);
    // five distinct vertices
    std::size_t vertex_lines = count_occurrences(dot, ";\n") - 5;
    CHECK(vertex_lines == 5);
}

TEST_CASE("corrupt traces are rejected by export") {
    GameTrace t;
    t.config = {4, 5, 6};
    t.rounds = {{1, Edge(0, 1), Color::Blue}, {2, Edge(0, 1), Color::Red}};
    t.status = {Verdict::Ongoing, 0};
    CHECK_THROWS_AS(export_dot(t), Error);
}

TEST_CASE("round trip: parse(export text) replays to the same status") {
    TableStore tables;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        PaperBuilder b(8, tables);
        RandomPainter p(seed);
        GameTrace t = run_game(b, p, GameConfig{4, 8, round_budget(8)});
        GameTrace back = trace_from_text(trace_to_text(t));
        CHECK(replay(back) == t.status);
        CHECK(trace_to_text(back) == trace_to_text(t));
    }
}
