#include "doctest.h"

#include "oramsey/painters.hpp"
#include "test_util.hpp"

using namespace oramsey;
using testutil::make_graph;

TEST_CASE("blocking painter colors red only when safe") {
    ColoredGraph empty;
    ColoredGraph two;
    two.add_vertex();
    two.add_vertex();
    CHECK(blocking_color(two, Edge(0, 1)) == Color::Red);

    auto red_p3 = make_graph(4, {{0, 1, Color::Red}, {1, 2, Color::Red}});
    CHECK(blocking_color(red_p3, Edge(2, 3)) == Color::Blue); // would complete a red P4

    auto star = make_graph(3, {{0, 1, Color::Red}, {0, 2, Color::Red}});
    CHECK(blocking_color(star, Edge(1, 2)) == Color::Blue); // would close a red triangle
}

TEST_CASE("blocking painter is definitionally tight") {
    // Blue only when red is witnessed unsafe.
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 300; ++iter) {
        ColoredGraph g = testutil::random_colored_graph(rng, 8, 0.3, 0.6);
        if (has_red_path_of_order(g, 4)) continue;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
                if (g.has_edge(u, v)) continue;
                Color c = blocking_color(g, Edge(u, v));
                bool unsafe = would_create_red_p4(g, u, v) || would_create_red_cycle(g, u, v);
                CHECK((c == Color::Blue) == unsafe);
            }
    }
}

TEST_CASE("blocking painter never yields red p4 nor red cycle in play") {
    // Any builder: grow a dense-ish board; red subgraph must stay a star forest.
    class DenseBuilder : public BuilderStrategy {
    public:
        Edge propose(const ColoredGraph& g) override {
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                for (VertexId v = u + 1; v < g.vertex_count(); ++v)
                    if (!g.has_edge(u, v)) return Edge(u, v);
            return Edge(static_cast<VertexId>(g.vertex_count()),
                        static_cast<VertexId>(g.vertex_count() + 1));
        }
    } builder;
    BlockingPainter painter;
    ColoredGraph g;
    for (int round = 0; round < 60; ++round) {
        Edge e = builder.propose(g);
        g.ensure_vertex(std::max(e.u, e.v));
        Color c = painter.color(g, e);
        g.add_edge(e.u, e.v, c);
        CHECK(red_subgraph_is_star_forest(g));
        CHECK(!has_red_path_of_order(g, 4));
    }
}

TEST_CASE("random painter determinism and factory") {
    auto p1 = make_painter("random:1");
    auto p2 = make_painter("random:1");
    REQUIRE(p1);
    REQUIRE(p2);
    ColoredGraph g = make_graph(2, {});
    for (int i = 0; i < 50; ++i) CHECK(p1->color(g, Edge(0, 1)) == p2->color(g, Edge(0, 1)));

    CHECK(make_painter("blocking") != nullptr);
    CHECK(make_painter("blue") != nullptr);
    CHECK(make_painter("red") != nullptr);
    CHECK(make_painter("nope") == nullptr);
}
