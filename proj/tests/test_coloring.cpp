#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "tcol/coloring.hpp"
#include "tcol/graph.hpp"

using tcol::Coloring;
using tcol::Edge;
using tcol::EdgeId;
using tcol::Graph;

TEST_CASE("uniform coloring starts everything at color 1") {
    const Coloring c = Coloring::uniform(5);
    CHECK(c.used == 1);
    CHECK(c.distinct_colors() == 1);
    for (int x : c.colors) CHECK(x == 1);
}

TEST_CASE("set_color tracks the maximum used color") {
    Coloring c = Coloring::uniform(3);
    c.set_color(1, 4);
    CHECK(c.used == 4);
    c.set_color(1, 2);  // lowering a vertex never lowers the watermark
    CHECK(c.used == 4);
    CHECK(c.distinct_colors() == 2);
}

TEST_CASE("normalize compacts labels preserving their order") {
    Coloring c = Coloring::uniform(5);
    c.colors = {3, 7, 3, 9, 7};
    c.used = 9;
    c.normalize();
    CHECK(c.colors == std::vector<int>{1, 2, 1, 3, 2});
    CHECK(c.used == 3);
}

TEST_CASE("verify reports exactly the monochromatic edges") {
    const Graph g = fixtures::cycle(4);  // edges 0-1, 1-2, 2-3, 3-0
    Coloring c = Coloring::uniform(4);
    c.colors = {1, 2, 1, 2};
    c.used = 2;
    CHECK(tcol::verify(g, c).empty());
    CHECK(tcol::is_proper(g, c));

    c.colors = {1, 1, 2, 2};
    const auto bad = tcol::verify(g, c);
    CHECK(bad == std::vector<EdgeId>{0, 2});
    CHECK_FALSE(tcol::is_proper(g, c));
}

TEST_CASE("verify on an edge subset only checks those edges") {
    const Graph g = fixtures::cycle(4);
    Coloring c = Coloring::uniform(4);
    c.colors = {1, 1, 2, 2};
    const std::vector<EdgeId> subset{1, 2};
    const auto bad = tcol::verify(g, c, subset);
    CHECK(bad == std::vector<EdgeId>{2});
}

TEST_CASE("verify rejects a coloring of the wrong size") {
    const Graph g = fixtures::path(3);
    Coloring c = Coloring::uniform(2);
    CHECK_THROWS_AS(tcol::verify(g, c), std::invalid_argument);
}

TEST_CASE("hamming distance counts differing vertices") {
    Coloring a = Coloring::uniform(4);
    Coloring b = Coloring::uniform(4);
    CHECK(tcol::hamming_distance(a, b) == 0);
    b.set_color(0, 2);
    b.set_color(3, 2);
    CHECK(tcol::hamming_distance(a, b) == 2);
}
