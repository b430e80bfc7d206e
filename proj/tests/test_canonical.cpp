#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "oramsey/canonical.hpp"
#include "test_util.hpp"

using namespace oramsey;
using testutil::make_graph;

TEST_CASE("canonical key invariant under relabeling") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 60; ++iter) {
        ColoredGraph g = testutil::random_colored_graph(rng, 9, 0.3, 0.5);
        std::string key = canonical_key(g);
        for (int rel = 0; rel < 100; ++rel) {
            ColoredGraph h = testutil::relabel(g, rng);
            CHECK(canonical_key(h) == key);
        }
    }
}

TEST_CASE("canonical key separates colors") {
    auto blue_p3 = make_graph(3, {{0, 1, Color::Blue}, {1, 2, Color::Blue}});
    auto red_p3 = make_graph(3, {{0, 1, Color::Red}, {1, 2, Color::Red}});
    CHECK(canonical_key(blue_p3) != canonical_key(red_p3));
}

TEST_CASE("canonical key separates handmade nonisomorphic pairs") {
    auto p4 = make_graph(4, {{0, 1, Color::Blue}, {1, 2, Color::Blue}, {2, 3, Color::Blue}});
    auto star = make_graph(4, {{0, 1, Color::Blue}, {0, 2, Color::Blue}, {0, 3, Color::Blue}});
    CHECK(canonical_key(p4) != canonical_key(star));

    auto mixed1 = make_graph(4, {{0, 1, Color::Red}, {1, 2, Color::Blue}, {2, 3, Color::Red}});
    auto mixed2 = make_graph(4, {{0, 1, Color::Red}, {1, 2, Color::Red}, {2, 3, Color::Blue}});
    CHECK(canonical_key(mixed1) != canonical_key(mixed2));

    auto two_k2 = make_graph(4, {{0, 1, Color::Blue}, {2, 3, Color::Blue}});
    auto p3_iso = make_graph(4, {{0, 1, Color::Blue}, {1, 2, Color::Blue}});
    CHECK(canonical_key(two_k2) != canonical_key(p3_iso));
}

TEST_CASE("isolated vertices fold to one representative") {
    auto base = make_graph(2, {{0, 1, Color::Blue}});
    auto one_spare = make_graph(3, {{0, 1, Color::Blue}});
    auto three_spares = make_graph(5, {{0, 1, Color::Blue}});
    CHECK(canonical_key(one_spare) == canonical_key(three_spares));
    CHECK(canonical_key(base) != canonical_key(one_spare));
    CHECK(canonical_key(base, 0) == canonical_key(three_spares, 0));
}


TEST_CASE("canonical key is injective on the <=3-edge catalog") {
    auto catalog = testutil::enumerate_catalog();
    // 1 edge: 2 classes; 2 edges: 6; 3 edges: 24.
    CHECK(catalog.size() == 32);
    std::set<std::string> keys;
    std::mt19937 rng(99);
    for (const auto& g : catalog) {
        std::string key = canonical_key(g);
        CHECK(keys.insert(key).second);
        for (int rel = 0; rel < 20; ++rel) CHECK(canonical_key(testutil::relabel(g, rng)) == key);
    }
    CHECK(keys.size() == catalog.size());
}

TEST_CASE("canonical key matches brute-force isomorphism verdicts") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        ColoredGraph a = testutil::random_colored_graph(rng, 6, 0.4, 0.5);
        ColoredGraph b = testutil::random_colored_graph(rng, 6, 0.4, 0.5);
        if (a.vertex_count() != b.vertex_count()) continue;
        bool iso = testutil::brute_isomorphic(a, b);
        bool same = canonical_key(a, 0) == canonical_key(b, 0);
        CHECK(iso == same);
    }
}

TEST_CASE("hex round trip") {
    std::string bytes = "\x00\x01\xfe\xff\x42";
    bytes.resize(5);
    CHECK(from_hex(to_hex(bytes)) == bytes);
    CHECK_THROWS_AS(from_hex("abc"), Error);
    CHECK_THROWS_AS(from_hex("zz"), Error);
}
