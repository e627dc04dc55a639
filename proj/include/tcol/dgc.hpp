#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcol/coloring.hpp"
#include "tcol/deadline.hpp"
#include "tcol/graph.hpp"

namespace tcol {

// Re-added edges that are monochromatic under the old coloring, plus the
// vertices they touch.
struct ConflictSubgraph {
    std::vector<Edge> conflict_edges;
    std::vector<VertexId> touched_vertices;  // sorted, distinct
};

// One dynamic repair problem: the rolled-back graph, the graph with the edits
// restored, the checkpoint coloring, and the two parameters plus the color
// ceiling the repair must fit under.
struct DgcInstance {
    Graph base_graph;
    Graph target_graph;
    Coloring base_coloring;
    std::vector<Edge> added_edges;  // target minus base, in target edge order
    int edit_k = 0;
    int increment_r = 0;
    int target_colors = 0;

    DgcInstance(Graph base, Graph target, Coloring coloring, int increment_r_, int target_colors_)
        : base_graph(std::move(base)),
          target_graph(std::move(target)),
          base_coloring(std::move(coloring)),
          increment_r(increment_r_),
          target_colors(target_colors_) {
        if (base_graph.vertex_count() != target_graph.vertex_count())
            throw std::invalid_argument("base and target graphs disagree on vertex count");
        if (static_cast<VertexId>(base_coloring.colors.size()) != base_graph.vertex_count())
            throw std::invalid_argument("coloring does not cover the vertex set");
        if (target_colors < 1) throw std::invalid_argument("target color count must be positive");
        if (increment_r < 0) throw std::invalid_argument("recolor budget must be non-negative");
        for (const Edge& e : base_graph.edges())
            if (!target_graph.has_edge(e.u, e.v))
                throw std::invalid_argument("base graph is not a subgraph of the target");
        for (const Edge& e : target_graph.edges())
            if (!base_graph.has_edge(e.u, e.v)) added_edges.push_back(e);
        edit_k = static_cast<int>(added_edges.size());
        if (increment_r > 2 * edit_k)
            throw std::invalid_argument("recolor budget exceeds twice the edit distance");
        if (!is_proper(base_graph, base_coloring))
            throw std::invalid_argument("checkpoint coloring is improper on the rolled-back graph");
    }
};

inline ConflictSubgraph conflict_subgraph(const DgcInstance& inst) {
    ConflictSubgraph h;
    for (const Edge& e : inst.added_edges)
        if (inst.base_coloring.color_of(e.u) == inst.base_coloring.color_of(e.v))
            h.conflict_edges.push_back(e);
    std::set<VertexId> touched;
    for (const Edge& e : h.conflict_edges) {
        touched.insert(e.u);
        touched.insert(e.v);
    }
    h.touched_vertices.assign(touched.begin(), touched.end());
    return h;
}

// Work caps for the repair machinery. The cover enumeration limit bounds how
// many alternatives a single repair may try; the node budgets bound the
// search trees when a rollback span turns out to be large.
struct RepairLimits {
    int max_covers = 256;
    long long cover_search_nodes = 200'000;
    long long enumeration_nodes = 120'000;
    long long recolor_nodes = 150'000;
    long long cascade_nodes = 250'000;
};

namespace detail {

struct BudgetExhausted {};

struct CoverContext {
    std::vector<std::pair<int, int>> edges;  // compact endpoints
    std::vector<VertexId> ids;               // compact -> original id
    int vcount = 0;
};

inline CoverContext compact_conflicts(const ConflictSubgraph& h) {
    CoverContext ctx;
    ctx.ids = h.touched_vertices;
    std::map<VertexId, int> to_compact;
    for (std::size_t i = 0; i < ctx.ids.size(); ++i)
        to_compact[ctx.ids[i]] = static_cast<int>(i);
    for (const Edge& e : h.conflict_edges)
        ctx.edges.emplace_back(to_compact[e.u], to_compact[e.v]);
    ctx.vcount = static_cast<int>(ctx.ids.size());
    return ctx;
}

// Bounded search tree for a vertex cover of size <= budget. Applies the
// degree-1 rule, the high-degree rule, and branches vertex-in / neighbors-in
// on a maximum-degree vertex.
inline bool cover_probe(const CoverContext& ctx, std::vector<std::pair<int, int>> edges,
                        int budget, std::vector<int>& cover, long long& nodes) {
    if (--nodes < 0) throw BudgetExhausted{};
    const std::size_t cover_mark = cover.size();
    for (;;) {
        if (edges.empty()) return true;
        if (budget <= 0) {
            cover.resize(cover_mark);
            return false;
        }
        std::vector<int> deg(static_cast<std::size_t>(ctx.vcount), 0);
        for (const auto& [a, b] : edges) {
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
        }
        int forced = -1;
        for (int v = 0; v < ctx.vcount; ++v) {
            if (deg[static_cast<std::size_t>(v)] > budget) {
                forced = v;
                break;
            }
        }
        if (forced < 0) {
            for (const auto& [a, b] : edges) {
                if (deg[static_cast<std::size_t>(a)] == 1) {
                    forced = b;
                    break;
                }
                if (deg[static_cast<std::size_t>(b)] == 1) {
                    forced = a;
                    break;
                }
            }
        }
        if (forced < 0) break;
        cover.push_back(forced);
        --budget;
        std::erase_if(edges, [forced](const auto& e) { return e.first == forced || e.second == forced; });
    }

    std::vector<int> deg(static_cast<std::size_t>(ctx.vcount), 0);
    for (const auto& [a, b] : edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    int pivot = 0;
    for (int v = 1; v < ctx.vcount; ++v)
        if (deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pivot)]) pivot = v;

    // Branch 1: pivot joins the cover.
    {
        auto rest = edges;
        std::erase_if(rest, [pivot](const auto& e) { return e.first == pivot || e.second == pivot; });
        cover.push_back(pivot);
        if (cover_probe(ctx, std::move(rest), budget - 1, cover, nodes)) return true;
        cover.pop_back();
    }
    // Branch 2: pivot stays out, so all its conflict neighbors join.
    {
        std::set<int> nbrs;
        for (const auto& [a, b] : edges) {
            if (a == pivot) nbrs.insert(b);
            if (b == pivot) nbrs.insert(a);
        }
        if (static_cast<int>(nbrs.size()) <= budget) {
            auto rest = edges;
            std::erase_if(rest, [&nbrs](const auto& e) {
                return nbrs.count(e.first) > 0 || nbrs.count(e.second) > 0;
            });
            const std::size_t mark = cover.size();
            cover.insert(cover.end(), nbrs.begin(), nbrs.end());
            if (cover_probe(ctx, std::move(rest), budget - static_cast<int>(nbrs.size()), cover,
                            nodes))
                return true;
            cover.resize(mark);
        }
    }
    cover.resize(cover_mark);
    return false;
}

}  // namespace detail

// Minimum-cardinality vertex cover of the conflict edges when its size is at
// most max_k; absent otherwise. The minimum is located by binary search over
// the budget, each probe a bounded search tree.
inline std::optional<std::vector<VertexId>> min_vertex_cover(
    const ConflictSubgraph& h, int max_k,
    long long node_budget = RepairLimits{}.cover_search_nodes) {
    if (h.conflict_edges.empty()) return std::vector<VertexId>{};
    if (max_k <= 0) return std::nullopt;

    const auto ctx = detail::compact_conflicts(h);
    const int hi_cap = std::min(max_k, ctx.vcount);

    auto probe = [&](int budget, std::vector<int>& cover) -> bool {
        cover.clear();
        long long nodes = node_budget;
        return detail::cover_probe(ctx, ctx.edges, budget, cover, nodes);
    };

    try {
        std::vector<int> best;
        if (!probe(hi_cap, best)) return std::nullopt;
        int lo = 1, hi = hi_cap;  // a non-empty edge set needs at least one vertex
        std::vector<int> scratch;
        while (lo < hi) {
            const int mid = lo + (hi - lo) / 2;
            if (probe(mid, scratch)) {
                best = scratch;
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        std::vector<VertexId> out;
        out.reserve(best.size());
        for (int c : best) out.push_back(ctx.ids[static_cast<std::size_t>(c)]);
        std::sort(out.begin(), out.end());
        return out;
    } catch (const detail::BudgetExhausted&) {
        return std::nullopt;
    }
}

namespace detail {

inline void enumerate_minimal_rec(const CoverContext& ctx, std::vector<char>& in_cover,
                                  std::vector<char>& excluded, int cover_size, int size_bound,
                                  std::set<std::vector<int>>& out, long long& nodes) {
    if (--nodes < 0) throw BudgetExhausted{};
    int eu = -1, ev = -1;
    for (const auto& [a, b] : ctx.edges) {
        if (!in_cover[static_cast<std::size_t>(a)] && !in_cover[static_cast<std::size_t>(b)]) {
            eu = a;
            ev = b;
            break;
        }
    }
    if (eu < 0) {
        // Every conflict edge covered; keep only minimal covers.
        std::vector<int> cover;
        for (int v = 0; v < ctx.vcount; ++v)
            if (in_cover[static_cast<std::size_t>(v)]) cover.push_back(v);
        for (int x : cover) {
            bool removable = true;
            for (const auto& [a, b] : ctx.edges) {
                if (a == x && !in_cover[static_cast<std::size_t>(b)]) removable = false;
                if (b == x && !in_cover[static_cast<std::size_t>(a)]) removable = false;
                if (!removable) break;
            }
            if (removable) return;
        }
        out.insert(std::move(cover));
        return;
    }
    if (cover_size >= size_bound) return;

    // Either eu joins the cover, or it stays out for good and ev must join.
    if (!excluded[static_cast<std::size_t>(eu)]) {
        in_cover[static_cast<std::size_t>(eu)] = 1;
        enumerate_minimal_rec(ctx, in_cover, excluded, cover_size + 1, size_bound, out, nodes);
        in_cover[static_cast<std::size_t>(eu)] = 0;
    }
    if (!excluded[static_cast<std::size_t>(ev)]) {
        const char eu_was = excluded[static_cast<std::size_t>(eu)];
        excluded[static_cast<std::size_t>(eu)] = 1;
        in_cover[static_cast<std::size_t>(ev)] = 1;
        enumerate_minimal_rec(ctx, in_cover, excluded, cover_size + 1, size_bound, out, nodes);
        in_cover[static_cast<std::size_t>(ev)] = 0;
        excluded[static_cast<std::size_t>(eu)] = eu_was;
    }
}

}  // namespace detail

// Distinct minimal covers of the conflict edges, size <= size_bound, in
// nondecreasing size then lexicographic order, at most `limit` of them.
inline std::vector<std::vector<VertexId>> enumerate_covers(
    const ConflictSubgraph& h, int size_bound, int limit,
    long long node_budget = RepairLimits{}.enumeration_nodes) {
    std::vector<std::vector<VertexId>> result;
    if (limit <= 0) return result;
    if (h.conflict_edges.empty()) {
        result.push_back({});
        return result;
    }
    if (size_bound <= 0) return result;

    const auto ctx = detail::compact_conflicts(h);
    std::set<std::vector<int>> found;
    std::vector<char> in_cover(static_cast<std::size_t>(ctx.vcount), 0);
    std::vector<char> excluded(static_cast<std::size_t>(ctx.vcount), 0);
    long long nodes = node_budget;
    try {
        detail::enumerate_minimal_rec(ctx, in_cover, excluded, 0, size_bound, found, nodes);
    } catch (const detail::BudgetExhausted&) {
        // best effort: sort and hand back whatever was collected
    }
    std::vector<std::vector<int>> covers(found.begin(), found.end());
    std::stable_sort(covers.begin(), covers.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& cover : covers) {
        if (static_cast<int>(result.size()) >= limit) break;
        std::vector<VertexId> orig;
        orig.reserve(cover.size());
        for (int c : cover) orig.push_back(ctx.ids[static_cast<std::size_t>(c)]);
        result.push_back(std::move(orig));
    }
    return result;
}

struct DgcResult {
    Coloring coloring;                // canonical labels, contiguous 1..used
    std::vector<VertexId> recolored;  // vertices the repair changed, pre-relabel
};

namespace detail {

// Backtracking recoloring of the set R within the color ceiling. Vertices
// outside R keep the checkpoint colors; members of R not yet assigned impose
// no constraint until they are.
inline bool recolor_set(const Graph& target, const std::vector<VertexId>& order, std::size_t pos,
                        int ceiling, std::vector<int>& colors, const std::vector<char>& in_set,
                        std::vector<char>& assigned, long long& nodes) {
    if (pos == order.size()) return true;
    if (--nodes < 0) throw BudgetExhausted{};
    const VertexId v = order[pos];
    const std::size_t vi = static_cast<std::size_t>(v);
    const int old = colors[vi];
    for (int c = 1; c <= ceiling; ++c) {
        bool ok = true;
        for (VertexId w : target.neighbors(v)) {
            const std::size_t wi = static_cast<std::size_t>(w);
            if (in_set[wi] && !assigned[wi]) continue;
            if (colors[wi] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colors[vi] = c;
        assigned[vi] = 1;
        if (recolor_set(target, order, pos + 1, ceiling, colors, in_set, assigned, nodes))
            return true;
        colors[vi] = old;
        assigned[vi] = 0;
    }
    return false;
}

// A possibly-violated constraint: a vertex above the ceiling when b < 0,
// otherwise the edge (a, b). Entries go stale rather than being removed and
// are re-checked on scan.
struct CascadeItem {
    VertexId a = -1;
    VertexId b = -1;
};

// Conflict-driven fallback: pick a live violation, branch over the legal
// moves that clear it, recoloring each vertex at most once. Any violated
// constraint has an endpoint still at its checkpoint color that a witness
// solution within the budget must also move, so the search is complete for
// the bounded-recoloring feasibility question (up to the node budget).
inline bool cascade_rec(const Graph& target, int ceiling, int budget_left,
                        std::vector<int>& colors, std::vector<char>& changed,
                        std::vector<CascadeItem>& cand, long long& nodes,
                        const Deadline& deadline) {
    if (--nodes < 0) throw BudgetExhausted{};
    deadline.check();
    const CascadeItem* live = nullptr;
    for (const CascadeItem& item : cand) {
        if (item.b < 0) {
            if (colors[static_cast<std::size_t>(item.a)] > ceiling) {
                live = &item;
                break;
            }
        } else if (colors[static_cast<std::size_t>(item.a)] ==
                   colors[static_cast<std::size_t>(item.b)]) {
            live = &item;
            break;
        }
    }
    if (live == nullptr) return true;
    if (budget_left <= 0) return false;
    const CascadeItem item = *live;  // copy: cand reallocates below

    auto try_vertex = [&](VertexId z) -> bool {
        const std::size_t zi = static_cast<std::size_t>(z);
        if (changed[zi]) return false;  // each vertex moves at most once
        const int old = colors[zi];
        for (int c = 1; c <= ceiling; ++c) {
            if (c == old) continue;
            bool blocked = false;
            for (VertexId w : target.neighbors(z)) {
                if (changed[static_cast<std::size_t>(w)] &&
                    colors[static_cast<std::size_t>(w)] == c) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;  // moved vertices are final; skip dead branches early
            const std::size_t mark = cand.size();
            colors[zi] = c;
            changed[zi] = 1;
            for (VertexId w : target.neighbors(z))
                if (colors[static_cast<std::size_t>(w)] == c) cand.push_back({z, w});
            if (cascade_rec(target, ceiling, budget_left - 1, colors, changed, cand, nodes,
                            deadline))
                return true;
            cand.resize(mark);
            colors[zi] = old;
            changed[zi] = 0;
        }
        return false;
    };

    if (item.b < 0) return try_vertex(item.a);
    if (try_vertex(item.a)) return true;
    return try_vertex(item.b);
}

}  // namespace detail

// Repairs the checkpoint coloring into a proper coloring of the target graph
// that uses at most target_colors colors and recolors at most increment_r
// vertices; absent when no repair is found. Stage one recolors one minimal
// conflict cover plus the over-ceiling vertices per attempt; if every
// enumerated cover fails, a conflict-driven cascade covers repairs that no
// single cover reaches.
inline std::optional<DgcResult> dgc_solve(const DgcInstance& inst, const RepairLimits& limits = {},
                                          const Deadline& deadline = {}) {
    const int t = inst.target_colors;
    const VertexId n = inst.target_graph.vertex_count();

    std::vector<VertexId> violators;  // parked above the ceiling, must move
    for (VertexId v = 0; v < n; ++v)
        if (inst.base_coloring.color_of(v) > t) violators.push_back(v);

    const ConflictSubgraph h = conflict_subgraph(inst);
    if (h.conflict_edges.empty() && violators.empty()) {
        DgcResult res{inst.base_coloring, {}};
        res.coloring.normalize();
        return res;
    }
    if (static_cast<int>(violators.size()) > inst.increment_r) return std::nullopt;

    // Stage 1: one enumerated minimal cover at a time, plus the violators.
    const int size_bound = std::min(inst.edit_k, inst.increment_r);
    const auto covers = enumerate_covers(h, size_bound, limits.max_covers, limits.enumeration_nodes);
    for (const auto& cover : covers) {
        deadline.check();
        std::vector<VertexId> to_fix = cover;
        to_fix.insert(to_fix.end(), violators.begin(), violators.end());
        std::sort(to_fix.begin(), to_fix.end());
        to_fix.erase(std::unique(to_fix.begin(), to_fix.end()), to_fix.end());
        if (static_cast<int>(to_fix.size()) > inst.increment_r) continue;

        std::vector<VertexId> order = to_fix;  // most-constrained first
        std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            return inst.target_graph.degree(a) > inst.target_graph.degree(b);
        });

        std::vector<int> colors = inst.base_coloring.colors;
        std::vector<char> in_set(static_cast<std::size_t>(n), 0);
        std::vector<char> assigned(static_cast<std::size_t>(n), 0);
        for (VertexId v : to_fix) in_set[static_cast<std::size_t>(v)] = 1;
        long long nodes = limits.recolor_nodes;
        bool solved = false;
        try {
            solved = detail::recolor_set(inst.target_graph, order, 0, t, colors, in_set, assigned,
                                         nodes);
        } catch (const detail::BudgetExhausted&) {
            continue;
        }
        if (!solved) continue;

        DgcResult res;
        for (VertexId v : to_fix)
            if (colors[static_cast<std::size_t>(v)] != inst.base_coloring.color_of(v))
                res.recolored.push_back(v);
        const int used = *std::max_element(colors.begin(), colors.end());
        res.coloring = Coloring{std::move(colors), used};
        res.coloring.normalize();
        return res;
    }

    // Stage 2: conflict-driven cascade for repairs no enumerated cover reaches.
    std::vector<int> colors = inst.base_coloring.colors;
    std::vector<char> changed(static_cast<std::size_t>(n), 0);
    std::vector<detail::CascadeItem> cand;
    for (VertexId v : violators) cand.push_back({v, -1});
    for (const Edge& e : inst.target_graph.edges())
        if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)])
            cand.push_back({e.u, e.v});
    long long nodes = limits.cascade_nodes;
    bool solved = false;
    try {
        solved = detail::cascade_rec(inst.target_graph, t, inst.increment_r, colors, changed, cand,
                                     nodes, deadline);
    } catch (const detail::BudgetExhausted&) {
        return std::nullopt;
    }
    if (!solved) return std::nullopt;

    DgcResult res;
    for (VertexId v = 0; v < n; ++v)
        if (changed[static_cast<std::size_t>(v)]) res.recolored.push_back(v);
    const int used = *std::max_element(colors.begin(), colors.end());
    res.coloring = Coloring{std::move(colors), used};
    res.coloring.normalize();
    return res;
}

}  // namespace tcol
