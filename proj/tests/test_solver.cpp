#include "doctest.h"

#include <set>

#include "oramsey/painters.hpp"
#include "oramsey/solver.hpp"
#include "test_util.hpp"

using namespace oramsey;
using testutil::make_graph;

namespace {

// Brute-force orbit count of candidate moves under color-preserving
// automorphisms found by permutation search. Fresh endpoints are modeled as
// two reserved ids beyond the vertex set. Assumes g has no isolated vertices.
std::size_t brute_move_orbits(const ColoredGraph& g) {
    const VertexId n = static_cast<VertexId>(g.vertex_count());
    std::vector<std::vector<VertexId>> autos;
    std::vector<VertexId> perm(n);
    for (VertexId i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (const auto& [e, c] : g.edges()) {
            auto mapped = g.edge_color(perm[e.u], perm[e.v]);
            if (!mapped || *mapped != c) {
                ok = false;
                break;
            }
        }
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<VertexId, VertexId>> candidates;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) candidates.push_back({u, v});
    for (VertexId u = 0; u < n; ++u) candidates.push_back({u, n});
    candidates.push_back({n, n + 1});

    std::set<std::pair<VertexId, VertexId>> seen;
    std::size_t orbits = 0;
    auto norm = [](VertexId a, VertexId b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (auto [u, v] : candidates) {
        if (seen.count(norm(u, v))) continue;
        ++orbits;
        for (const auto& a : autos) {
            VertexId mu = u < n ? a[u] : u;
            VertexId mv = v < n ? a[v] : v;
            seen.insert(norm(mu, mv));
        }
    }
    return orbits;
}

// Raw minimax without canonical keys, orbit reduction or pruning: the
// independent second route for tiny instances.
bool naive_win(const ColoredGraph& g, std::size_t m, std::size_t n, std::size_t b) {
    if (b == 0) return false;
    const VertexId nv = static_cast<VertexId>(g.vertex_count());
    std::vector<Edge> moves;
    for (VertexId u = 0; u < nv; ++u) {
        for (VertexId v = u + 1; v < nv; ++v)
            if (!g.has_edge(u, v)) moves.push_back(Edge(u, v));
        moves.push_back(Edge(u, nv));
    }
    moves.push_back(Edge(nv, nv + 1));
    for (const Edge& e : moves) {
        bool wins = true;
        for (Color c : {Color::Red, Color::Blue}) {
            ColoredGraph child = g;
            child.ensure_vertex(std::max(e.u, e.v));
            child.add_edge(e.u, e.v, c);
            bool terminal = c == Color::Red ? has_path_of_order(child, Color::Red, m)
                                            : has_path_of_order(child, Color::Blue, n);
            if (!terminal && !naive_win(child, m, n, b - 1)) {
                wins = false;
                break;
            }
        }
        if (wins) return true;
    }
    return false;
}

std::size_t naive_value(std::size_t m, std::size_t n, std::size_t cap) {
    ColoredGraph empty;
    for (std::size_t b = 1; b <= cap; ++b)
        if (naive_win(empty, m, n, b)) return b;
    return 0;
}

} // namespace

TEST_CASE("solver agrees with a raw minimax on tiny instances") {
    // Dual route: no transposition table, no orbit reduction, no pruning.
    for (auto [m, n, cap] : {std::tuple<std::size_t, std::size_t, std::size_t>{2, 3, 4},
                             {2, 4, 4},
                             {3, 2, 4},
                             {3, 3, 4}}) {
        std::size_t naive = naive_value(m, n, cap);
        auto fast = solve_value(m, n, cap);
        REQUIRE(fast.value.has_value());
        CHECK(*fast.value == naive);
    }
}

TEST_CASE("builder moves up to isomorphism: anchors") {
    ColoredGraph empty;
    CHECK(builder_moves_up_to_iso(empty).size() == 1); // fresh-fresh only

    auto single = make_graph(2, {{0, 1, Color::Blue}});
    CHECK(builder_moves_up_to_iso(single).size() == brute_move_orbits(single));

    auto p3 = make_graph(3, {{0, 1, Color::Blue}, {1, 2, Color::Blue}});
    // fresh-fresh, fresh-endpoint, fresh-center, and the a-c chord
    CHECK(builder_moves_up_to_iso(p3).size() == 4);
    CHECK(brute_move_orbits(p3) == 4);
}

TEST_CASE("builder moves up to isomorphism: random cross-check") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 120; ++iter) {
        ColoredGraph g = testutil::random_colored_graph(rng, 6, 0.45, 0.5);
        bool isolated = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.is_isolated(v)) isolated = true;
        if (isolated) continue;
        CHECK(builder_moves_up_to_iso(g).size() == brute_move_orbits(g));
    }
}

TEST_CASE("isolated drawn vertices are fresh-equivalent for moves") {
    ColoredGraph g = make_graph(3, {{0, 1, Color::Blue}}); // vertex 2 isolated
    auto moves = builder_moves_up_to_iso(g);
    // (2, fresh) collapses with fresh-fresh, and (0,2)~(1,2) with fresh-ends.
    CHECK(moves.size() == 2);
}

TEST_CASE("solver reproduces the known path values") {
    CHECK(solve_value(3, 2, 4).value == 2);
    CHECK(solve_value(3, 3, 5).value == 3);
    CHECK(solve_value(3, 4, 6).value == 4);
    CHECK(solve_value(3, 5, 7).value == 5);
    CHECK(solve_value(4, 4, 7).value == 5);
    CHECK(solve_value(4, 5, 8).value == 6);
}

TEST_CASE("solver monotonicity in n") {
    std::size_t prev = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        auto r = solve_value(4, n, 8);
        REQUIRE(r.value.has_value());
        CHECK(*r.value >= prev);
        prev = *r.value;
    }
}

TEST_CASE("transposition table does not change values") {
    for (auto [m, n, budget] : {std::tuple<std::size_t, std::size_t, std::size_t>{3, 3, 5},
                                {3, 4, 6},
                                {4, 4, 7}}) {
        SolverOptions plain;
        plain.use_memo = false;
        auto without = solve_value(m, n, budget, false, plain);
        auto with = solve_value(m, n, budget);
        REQUIRE(without.value.has_value());
        CHECK(without.value == with.value);
    }
}

TEST_CASE("budget too small yields unknown") {
    auto r = solve_value(4, 5, 5);
    CHECK(!r.value.has_value());
}

TEST_CASE("solver resource limits raise typed errors") {
    CHECK_THROWS_AS(solve_value(4, 9, 15), Error); // beyond the supported budget
    SolverOptions tiny;
    tiny.max_nodes = 5;
    CHECK_THROWS_AS(solve_value(4, 5, 8, false, tiny), Error); // node cap
}

TEST_CASE("strategy table extraction, closure and mutation") {
    StrategyTable t = extract_strategy(4, 5, 8);
    CHECK(t.value == 6);
    CHECK(t.red_order == 4);
    CHECK(t.blue_order == 5);
    CHECK(!t.entries.empty());

    Solver solver(4, 5);
    solver.verify_table(t); // full reply closure

    StrategyTable broken = t;
    std::string root = canonical_key(ColoredGraph{}, 0);
    for (auto it = broken.entries.begin(); it != broken.entries.end(); ++it) {
        if (it->first != root) {
            broken.entries.erase(it);
            break;
        }
    }
    CHECK_THROWS_AS(solver.verify_table(broken), Error);
}

TEST_CASE("table file round trip") {
    StrategyTable t = extract_strategy(4, 4, 6);
    std::string text = table_to_text(t);
    StrategyTable back = table_from_text(text);
    CHECK(back.value == t.value);
    CHECK(back.red_order == t.red_order);
    CHECK(back.blue_order == t.blue_order);
    CHECK(back.entries.size() == t.entries.size());
    CHECK(table_to_text(back) == text);
    Solver(4, 4).verify_table(back);

    CHECK_THROWS_AS(table_from_text("garbage"), Error);
}

namespace {

class TablePlayer : public BuilderStrategy {
public:
    explicit TablePlayer(const StrategyTable& t) : table_(t) {}
    Edge propose(const ColoredGraph& g) override { return apply_table_move(table_, g); }

private:
    const StrategyTable& table_;
};

} // namespace

TEST_CASE("extracted table wins against assorted painters") {
    StrategyTable t = extract_strategy(4, 5, 8);
    GameConfig cfg{4, 5, 6};
    {
        TablePlayer b(t);
        BlockingPainter p;
        GameTrace tr = run_game(b, p, cfg);
        CHECK(tr.status.verdict == Verdict::BlueWin);
        CHECK(tr.status.round == 6); // the lower bound is tight
    }
    {
        TablePlayer b(t);
        ConstantPainter p(Color::Blue);
        GameTrace tr = run_game(b, p, cfg);
        CHECK((tr.status.verdict == Verdict::BlueWin || tr.status.verdict == Verdict::RedWin));
        CHECK(tr.rounds.size() <= 6);
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        TablePlayer b(t);
        RandomPainter p(seed);
        GameTrace tr = run_game(b, p, cfg);
        CHECK(tr.status.verdict != Verdict::BudgetExceeded);
        CHECK(tr.rounds.size() <= 6);
    }
}

TEST_CASE("minimax painter maximizes resistance") {
    // One move from a forced red P4: must pick blue.
    MinimaxPainter painter(GameConfig{4, 6, 8});
    auto g = make_graph(4, {{0, 1, Color::Red}, {1, 2, Color::Red}});
    CHECK(painter.color(g, Edge(2, 3)) == Color::Blue);

    // Initial edge of the (4,4) game: either color leads to 5 total rounds.
    Solver s(4, 4);
    auto red_child = make_graph(2, {{0, 1, Color::Red}});
    auto blue_child = make_graph(2, {{0, 1, Color::Blue}});
    CHECK(s.rounds_to_win(red_child, 6) == 4);
    CHECK(s.rounds_to_win(blue_child, 6) == 4);

    CHECK_THROWS_AS(MinimaxPainter(GameConfig{4, 8, 12}), Error);
}

TEST_CASE("minimax painter forces the full budget at n=5") {
    StrategyTable t = extract_strategy(4, 5, 8);
    TablePlayer b(t);
    MinimaxPainter p(GameConfig{4, 5, 6});
    GameTrace tr = run_game(b, p, GameConfig{4, 5, 6});
    // Exactly six rounds; on the last round both colors may end the game, in
    // which case the painter's Red tie-break makes the win red.
    CHECK((tr.status.verdict == Verdict::BlueWin || tr.status.verdict == Verdict::RedWin));
    CHECK(tr.rounds.size() == 6);
}
