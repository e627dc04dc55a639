#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "tcol/exact.hpp"

using tcol::Graph;

TEST_CASE("k_colorable on boundary cases") {
    const Graph k4 = fixtures::complete(4);
    CHECK_FALSE(tcol::k_colorable(k4, 3));
    CHECK(tcol::k_colorable(k4, 4));

    const Graph c5 = fixtures::cycle(5);
    CHECK_FALSE(tcol::k_colorable(c5, 2));
    CHECK(tcol::k_colorable(c5, 3));
}

TEST_CASE("brute-force chromatic numbers of the small catalog") {
    CHECK(tcol::brute_force_chromatic(fixtures::complete(4)) == 4);
    CHECK(tcol::brute_force_chromatic(fixtures::cycle(5)) == 3);
    CHECK(tcol::brute_force_chromatic(fixtures::cycle(6)) == 2);
    CHECK(tcol::brute_force_chromatic(fixtures::cycle(7)) == 3);
    CHECK(tcol::brute_force_chromatic(fixtures::path(4)) == 2);
    CHECK(tcol::brute_force_chromatic(fixtures::star(6)) == 2);
    CHECK(tcol::brute_force_chromatic(fixtures::petersen()) == 3);
    CHECK(tcol::brute_force_chromatic(fixtures::crown(3)) == 2);
    CHECK(tcol::brute_force_chromatic(fixtures::complete_bipartite(3, 3)) == 2);
    CHECK(tcol::brute_force_chromatic(fixtures::wheel(6)) == 4);   // odd rim
    CHECK(tcol::brute_force_chromatic(fixtures::wheel(7)) == 3);   // even rim
    CHECK(tcol::brute_force_chromatic(fixtures::grotzsch()) == 4);  // triangle-free, 11 vertices
}

TEST_CASE("single vertices and empty graphs need one color") {
    CHECK(tcol::brute_force_chromatic(Graph(1, std::initializer_list<tcol::Edge>{})) == 1);
    CHECK(tcol::brute_force_chromatic(Graph(3, std::initializer_list<tcol::Edge>{})) == 1);
}

TEST_CASE("the vertex guard rejects graphs beyond desk scale") {
    const Graph big = fixtures::cycle(tcol::kExactVertexLimit + 1);
    CHECK_THROWS_AS(tcol::brute_force_chromatic(big), std::invalid_argument);
    CHECK(tcol::brute_force_chromatic(fixtures::cycle(tcol::kExactVertexLimit)) == 2);
}
