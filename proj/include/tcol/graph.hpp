#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tcol {

// 0-based vertex index. DIMACS files are 1-based; conversion happens in the parser.
using VertexId = std::int32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph. Edge list keeps first-occurrence order;
// adjacency lists are sorted ascending.
class Graph {
public:
    Graph(VertexId vertex_count, std::span<const Edge> edges)
        : n_(vertex_count), adj_(static_cast<std::size_t>(std::max<VertexId>(vertex_count, 0))) {
        if (vertex_count <= 0)
            throw std::invalid_argument("graph needs at least one vertex");
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(edges.size() * 2);
        edges_.reserve(edges.size());
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v >= n_)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                            "-" + std::to_string(e.v));
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            const std::uint64_t key =
                (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
            if (!seen.insert(key).second)
                throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                            std::to_string(e.v));
            edges_.push_back(e);
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    Graph(VertexId vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    VertexId vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexId degree(VertexId v) const {
        check_vertex(v);
        return static_cast<VertexId>(adj_[static_cast<std::size_t>(v)].size());
    }

    VertexId max_degree() const {
        VertexId best = 0;
        for (const auto& nbrs : adj_) best = std::max<VertexId>(best, static_cast<VertexId>(nbrs.size()));
        return best;
    }

    bool has_edge(VertexId a, VertexId b) const {
        if (a == b) return false;
        const auto& nbrs = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

private:
    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    VertexId n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

}  // namespace tcol
