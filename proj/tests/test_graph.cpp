#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "tcol/graph.hpp"

using tcol::Edge;
using tcol::Graph;
using tcol::VertexId;

TEST_CASE("edges normalize their endpoints") {
    const Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(Edge(1, 3) == e);
}

TEST_CASE("graph exposes counts, degrees, and sorted neighbor lists") {
    const Graph g(4, {Edge(0, 1), Edge(2, 0), Edge(0, 3), Edge(1, 2)});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(3) == 1);
    CHECK(g.max_degree() == 3);

    const auto n0 = g.neighbors(0);
    REQUIRE(n0.size() == 3);
    CHECK(std::vector<VertexId>(n0.begin(), n0.end()) == std::vector<VertexId>{1, 2, 3});

    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("edge list keeps first-occurrence order") {
    const Graph g(4, {Edge(2, 3), Edge(0, 1), Edge(1, 3)});
    CHECK(g.edge(0) == Edge(2, 3));
    CHECK(g.edge(1) == Edge(0, 1));
    CHECK(g.edge(2) == Edge(1, 3));
}

TEST_CASE("construction rejects malformed input") {
    CHECK_THROWS_AS(Graph(0, std::initializer_list<Edge>{}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), std::invalid_argument);      // out of range
    CHECK_THROWS_AS(Graph(2, {Edge(1, 1)}), std::invalid_argument);      // self-loop
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);  // duplicate
}

TEST_CASE("generators have the expected shape") {
    const Graph k5 = fixtures::complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.max_degree() == 4);

    const Graph c6 = fixtures::cycle(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.max_degree() == 2);

    const Graph pet = fixtures::petersen();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (VertexId v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    const Graph q5 = fixtures::queen(5);
    CHECK(q5.vertex_count() == 25);
    for (VertexId v = 0; v < 25; ++v) CHECK(q5.degree(v) >= 12);

    const Graph grz = fixtures::grotzsch();
    CHECK(grz.vertex_count() == 11);
    CHECK(grz.edge_count() == 20);

    const Graph crown3 = fixtures::crown(3);
    CHECK(crown3.vertex_count() == 6);
    CHECK(crown3.edge_count() == 6);
}

TEST_CASE("random generators are seed-deterministic") {
    const Graph a = fixtures::gnp(40, 0.3, 7);
    const Graph b = fixtures::gnp(40, 0.3, 7);
    const Graph c = fixtures::gnp(40, 0.3, 8);
    REQUIRE(a.edge_count() == b.edge_count());
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.edge_count()); ++i)
        CHECK(a.edge(i) == b.edge(i));
    CHECK(a.edge_count() != c.edge_count());  // overwhelmingly likely for distinct seeds

    const Graph g1 = fixtures::geometric(30, 0.25, 3);
    const Graph g2 = fixtures::geometric(30, 0.25, 3);
    CHECK(g1.edge_count() == g2.edge_count());
}
