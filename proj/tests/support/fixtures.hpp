#pragma once

// Graph generators shared by the unit and acceptance suites. Everything is
// deterministic: random families take an explicit seed and use the library
// RNG, so fixture graphs are identical across runs and platforms.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tcol/dimacs.hpp"
#include "tcol/graph.hpp"
#include "tcol/rng.hpp"

namespace fixtures {

using tcol::Edge;
using tcol::Graph;
using tcol::VertexId;

inline Graph complete(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph cycle(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges);
}

inline Graph path(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, edges);
}

inline Graph star(VertexId leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

// Cycle 0..n-2 plus a hub adjacent to every rim vertex.
inline Graph wheel(VertexId n) {
    const VertexId rim = n - 1;
    std::vector<Edge> edges;
    for (VertexId u = 0; u < rim; ++u) edges.emplace_back(u, (u + 1) % rim);
    for (VertexId u = 0; u < rim; ++u) edges.emplace_back(u, rim);
    return Graph(n, edges);
}

inline Graph complete_bipartite(VertexId a, VertexId b) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

// K_{k,k} minus a perfect matching; bipartite, so 2-colorable, but a bad
// vertex order drives plain greedy to k colors.
inline Graph crown(VertexId k) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < k; ++u)
        for (VertexId v = 0; v < k; ++v)
            if (u != v) edges.emplace_back(u, k + v);
    return Graph(2 * k, edges);
}

inline Graph petersen() {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 5; ++u) edges.emplace_back(u, (u + 1) % 5);  // outer C5
    for (VertexId u = 0; u < 5; ++u) edges.emplace_back(5 + u, 5 + (u + 2) % 5);  // inner star
    for (VertexId u = 0; u < 5; ++u) edges.emplace_back(u, 5 + u);  // spokes
    return Graph(10, edges);
}

// n x n queen graph: same row, column, or diagonal.
inline Graph queen(int n) {
    const auto id = [n](int r, int c) { return static_cast<VertexId>(r * n + c); };
    std::vector<Edge> edges;
    for (int r1 = 0; r1 < n; ++r1)
        for (int c1 = 0; c1 < n; ++c1)
            for (int r2 = r1; r2 < n; ++r2)
                for (int c2 = 0; c2 < n; ++c2) {
                    if (r2 == r1 && c2 <= c1) continue;
                    const bool attacks = r1 == r2 || c1 == c2 ||
                                         (r2 - r1) == (c2 - c1) || (r2 - r1) == (c1 - c2);
                    if (attacks) edges.emplace_back(id(r1, c1), id(r2, c2));
                }
    return Graph(static_cast<VertexId>(n) * n, edges);
}

// Mycielski construction: chromatic number rises by one, clique number stays.
inline Graph mycielski(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    for (const Edge& e : g.edges()) {
        edges.emplace_back(e.u, n + e.v);
        edges.emplace_back(e.v, n + e.u);
    }
    for (VertexId v = 0; v < n; ++v) edges.emplace_back(n + v, 2 * n);
    return Graph(2 * n + 1, edges);
}

inline Graph grotzsch() { return mycielski(cycle(5)); }  // 11 vertices, needs 4 colors

// Iterated Mycielski over K2: chromatic number is steps + 2 by construction.
inline Graph mycielski_tower(int steps) {
    Graph g = path(2);  // K2
    for (int i = 0; i < steps; ++i) g = mycielski(g);
    return g;
}

inline Graph gnp(VertexId n, double p, std::uint64_t seed) {
    tcol::Rng rng(seed);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Random geometric graph on the unit square: edge when the points sit within
// the radius.
inline Graph geometric(VertexId n, double radius, std::uint64_t seed) {
    tcol::Rng rng(seed);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        const double x = rng.next_unit();
        const double y = rng.next_unit();
        pts.emplace_back(x, y);
    }
    const double r2 = radius * radius;
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            const double dx = pts[static_cast<std::size_t>(u)].first - pts[static_cast<std::size_t>(v)].first;
            const double dy = pts[static_cast<std::size_t>(u)].second - pts[static_cast<std::size_t>(v)].second;
            if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

inline void write_col_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write fixture " + path.string());
    tcol::write_col(out, g);
}

}  // namespace fixtures
