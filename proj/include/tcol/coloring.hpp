#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcol/graph.hpp"

namespace tcol {

// Vertex -> color assignment, colors 1-based. A normalized coloring uses
// exactly the range 1..used with no gaps.
struct Coloring {
    std::vector<int> colors;
    int used = 0;

    static Coloring uniform(VertexId vertex_count) {
        Coloring c;
        c.colors.assign(static_cast<std::size_t>(vertex_count), 1);
        c.used = 1;
        return c;
    }

    int color_of(VertexId v) const { return colors[static_cast<std::size_t>(v)]; }
    void set_color(VertexId v, int color) {
        colors[static_cast<std::size_t>(v)] = color;
        used = std::max(used, color);
    }

    int distinct_colors() const {
        std::vector<int> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        return static_cast<int>(sorted.size());
    }

    // Remaps colors onto 1..k preserving relative order of the labels in use.
    void normalize() {
        std::vector<int> present = colors;
        std::sort(present.begin(), present.end());
        present.erase(std::unique(present.begin(), present.end()), present.end());
        if (!present.empty() && present.front() >= 1 &&
            present.back() == static_cast<int>(present.size())) {
            used = present.back();
            return;  // already contiguous
        }
        std::vector<int> remap(present.empty() ? 0 : static_cast<std::size_t>(present.back()) + 1, 0);
        for (std::size_t i = 0; i < present.size(); ++i)
            remap[static_cast<std::size_t>(present[i])] = static_cast<int>(i) + 1;
        for (int& c : colors) c = remap[static_cast<std::size_t>(c)];
        used = static_cast<int>(present.size());
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

using EdgeId = std::int64_t;

// Edges of the given subset (all edges when absent) whose endpoints share a
// color. Empty result means the coloring is proper relative to that edge set.
inline std::vector<EdgeId> verify(const Graph& g, const Coloring& c,
                                  std::span<const EdgeId> edge_subset) {
    if (static_cast<VertexId>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    std::vector<EdgeId> conflicts;
    for (EdgeId idx : edge_subset) {
        const Edge& e = g.edge(static_cast<std::size_t>(idx));
        if (c.color_of(e.u) == c.color_of(e.v)) conflicts.push_back(idx);
    }
    return conflicts;
}

inline std::vector<EdgeId> verify(const Graph& g, const Coloring& c) {
    if (static_cast<VertexId>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    std::vector<EdgeId> conflicts;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (c.color_of(edges[i].u) == c.color_of(edges[i].v))
            conflicts.push_back(static_cast<EdgeId>(i));
    return conflicts;
}

inline bool is_proper(const Graph& g, const Coloring& c) { return verify(g, c).empty(); }

inline int hamming_distance(const Coloring& a, const Coloring& b) {
    if (a.colors.size() != b.colors.size())
        throw std::invalid_argument("colorings cover different vertex sets");
    int d = 0;
    for (std::size_t i = 0; i < a.colors.size(); ++i)
        if (a.colors[i] != b.colors[i]) ++d;
    return d;
}

}  // namespace tcol
