#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tcol/coloring.hpp"
#include "tcol/deadline.hpp"
#include "tcol/graph.hpp"

namespace tcol {

inline constexpr VertexId kExactVertexLimit = 14;

namespace detail {

inline bool k_colorable_rec(const Graph& g, std::span<const VertexId> order, std::size_t pos,
                            int k, int max_used, std::vector<int>& colors) {
    if (pos == order.size()) return true;
    const VertexId v = order[pos];
    // Symmetry break: a fresh color is only ever tried as max_used + 1.
    const int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (VertexId w : g.neighbors(v)) {
            if (colors[static_cast<std::size_t>(w)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colors[static_cast<std::size_t>(v)] = c;
        if (k_colorable_rec(g, order, pos + 1, k, std::max(max_used, c), colors)) return true;
        colors[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

}  // namespace detail

inline bool k_colorable(const Graph& g, int k) {
    if (k <= 0) return false;
    if (k >= g.vertex_count()) return true;
    std::vector<VertexId> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&g](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    std::vector<int> colors(order.size(), 0);
    return detail::k_colorable_rec(g, order, 0, k, 0, colors);
}

// Exact chromatic number by trying k = 1, 2, ... with backtracking search.
// Guarded: exponential, meant for test-scale graphs only.
inline int brute_force_chromatic(const Graph& g) {
    if (g.vertex_count() > kExactVertexLimit)
        throw std::invalid_argument("graph too large for exact search (" +
                                    std::to_string(g.vertex_count()) + " > " +
                                    std::to_string(kExactVertexLimit) + " vertices)");
    for (int k = 1;; ++k)
        if (k_colorable(g, k)) return k;
}

}  // namespace tcol
