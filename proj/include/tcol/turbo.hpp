#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcol/coloring.hpp"
#include "tcol/deadline.hpp"
#include "tcol/dgc.hpp"
#include "tcol/graph.hpp"
#include "tcol/rng.hpp"

namespace tcol {

// Insertion order for the incremental run: seeded shuffle, then a stable sort
// that front-loads edges between high-degree vertices (degrees taken in the
// full graph). The shuffle is the tiebreak, so equal keys still vary by seed.
struct EdgeSchedule {
    std::vector<Edge> order;
    std::uint64_t seed = 0;
};

inline EdgeSchedule schedule_edges(const Graph& g, std::uint64_t seed) {
    EdgeSchedule s;
    s.seed = seed;
    s.order.assign(g.edges().begin(), g.edges().end());
    Rng rng(seed);
    rng.shuffle(s.order);
    std::stable_sort(s.order.begin(), s.order.end(), [&](const Edge& a, const Edge& b) {
        const int amax = std::max(g.degree(a.u), g.degree(a.v));
        const int bmax = std::max(g.degree(b.u), g.degree(b.v));
        if (amax != bmax) return amax > bmax;
        return std::min(g.degree(a.u), g.degree(a.v)) > std::min(g.degree(b.u), g.degree(b.v));
    });
    return s;
}

// Tracks when each color class was opened during the incremental run.
// color_events[i] is the number of edges added at the moment color i+1 first
// appeared, counting the triggering edge; color 1 is on the board before any
// edge arrives.
struct RegretTracker {
    std::int64_t total_edges = 0;
    int k_best = 1;
    std::int64_t edges_added = 0;
    std::vector<std::int64_t> color_events{0};

    RegretTracker(std::int64_t total_edges_, int k_best_)
        : total_edges(total_edges_), k_best(k_best_) {
        if (total_edges < 0) throw std::invalid_argument("negative edge count");
        if (k_best < 1) throw std::invalid_argument("reference color count must be positive");
    }

    int colors() const { return static_cast<int>(color_events.size()); }

    void on_edge(int colors_now) {
        ++edges_added;
        while (colors() < colors_now) color_events.push_back(edges_added);
    }

    // m = min over live colors i of n_i / (c - i), where n_i counts the edges
    // added since color i appeared. The newest color contributes no term.
    double regret_metric() const {
        const int c = colors();
        if (c <= 1) return std::numeric_limits<double>::infinity();
        double m = std::numeric_limits<double>::infinity();
        for (int i = 1; i < c; ++i) {
            const auto since = static_cast<double>(edges_added - color_events[static_cast<std::size_t>(i - 1)]);
            m = std::min(m, since / static_cast<double>(c - i));
        }
        return m;
    }

    // Strict comparison against |E| / k_best, done in exact integers:
    // n_i * k_best < |E| * (c - i) for some i.
    bool is_moment_of_regret() const {
        const int c = colors();
        if (c <= 1) return false;
        for (int i = 1; i < c; ++i) {
            const std::int64_t since = edges_added - color_events[static_cast<std::size_t>(i - 1)];
            if (since * k_best < total_edges * static_cast<std::int64_t>(c - i)) return true;
        }
        return false;
    }

    // After an accepted repair the old opening times are meaningless; every
    // color is treated as opened at the repair index.
    void reset_after_repair(std::int64_t repair_index, int colors_now) {
        color_events.assign(static_cast<std::size_t>(std::max(colors_now, 1)), repair_index);
    }
};

// Snapshots plus per-insertion recolor diffs, enough to reconstruct the
// coloring after any prefix of the run at or beyond the last accepted repair.
class CheckpointLog {
public:
    struct DiffEntry {
        std::int64_t edge_count;
        VertexId vertex;
        int old_color;
        int new_color;
    };

    explicit CheckpointLog(const Coloring& initial) { snapshots_[0] = initial.colors; }

    std::int64_t last_repair() const { return last_repair_; }
    std::size_t snapshot_count() const { return snapshots_.size(); }
    const std::vector<DiffEntry>& diffs() const { return diffs_; }

    void record_snapshot(std::int64_t edge_count, const Coloring& c) {
        snapshots_[edge_count] = c.colors;
    }

    void record_diff(std::int64_t edge_count, VertexId v, int old_color, int new_color) {
        diffs_.push_back({edge_count, v, old_color, new_color});
    }

    // Coloring after exactly `edge_count` insertions: nearest snapshot at or
    // below, plus a replay of the recolor diffs up to that point.
    Coloring reconstruct(std::int64_t edge_count) const {
        auto it = snapshots_.upper_bound(edge_count);
        if (it == snapshots_.begin())
            throw std::invalid_argument("reconstruction point precedes the log");
        --it;
        std::vector<int> colors = it->second;
        auto d = std::lower_bound(diffs_.begin(), diffs_.end(), it->first,
                                  [](const DiffEntry& e, std::int64_t t) { return e.edge_count <= t; });
        for (; d != diffs_.end() && d->edge_count <= edge_count; ++d)
            colors[static_cast<std::size_t>(d->vertex)] = d->new_color;
        const int used = *std::max_element(colors.begin(), colors.end());
        return Coloring{std::move(colors), used};
    }

    // An accepted repair rewrites history: keep one snapshot at the repair
    // index and drop everything else.
    void reset(std::int64_t repair_index, const Coloring& repaired) {
        snapshots_.clear();
        snapshots_[repair_index] = repaired.colors;
        diffs_.clear();
        last_repair_ = repair_index;
    }

private:
    std::map<std::int64_t, std::vector<int>> snapshots_;
    std::vector<DiffEntry> diffs_;
    std::int64_t last_repair_ = 0;
};

// Latest checkpoint whose color class stayed stable long enough: the largest
// i with color_events[i] - color_events[i-1] >= |E| / k_best (exact integer
// comparison), rolled back to just before color i+1 opened. Falls back to the
// last accepted repair, and never precedes it.
inline std::int64_t rollback_point(const RegretTracker& tracker, const CheckpointLog& log) {
    const auto& ev = tracker.color_events;
    for (std::size_t i = ev.size(); i-- > 1;) {
        const std::int64_t gap = ev[i] - ev[i - 1];
        if (gap * tracker.k_best >= tracker.total_edges)
            return std::max(ev[i] - 1, log.last_repair());
    }
    return log.last_repair();
}

struct InsertResult {
    bool conflict = false;    // endpoints were monochromatic on arrival
    bool recolored = false;   // an endpoint moved to an existing color
    bool new_color = false;   // a fresh color was opened
    VertexId vertex = -1;     // the endpoint that changed, if any
    int old_color = 0;
    int new_color_value = 0;
};

namespace detail {

// Resolves one edge insertion against the adjacency built so far. On a
// conflict the first stored endpoint is recolored to the smallest existing
// color free at it, then the second endpoint; if both are stuck, a new color
// goes on the first endpoint.
inline InsertResult insert_edge(std::vector<std::vector<VertexId>>& adj, Coloring& coloring,
                                Edge e, std::vector<int>& mark, int& stamp) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);

    InsertResult r;
    if (coloring.color_of(e.u) != coloring.color_of(e.v)) return r;
    r.conflict = true;

    auto smallest_free = [&](VertexId x) -> int {
        ++stamp;
        for (VertexId w : adj[static_cast<std::size_t>(x)])
            mark[static_cast<std::size_t>(coloring.color_of(w))] = stamp;
        for (int c = 1; c <= coloring.used; ++c)
            if (mark[static_cast<std::size_t>(c)] != stamp) return c;
        return 0;
    };

    for (VertexId x : {e.u, e.v}) {
        const int c = smallest_free(x);
        if (c != 0) {
            r.recolored = true;
            r.vertex = x;
            r.old_color = coloring.color_of(x);
            r.new_color_value = c;
            coloring.set_color(x, c);
            return r;
        }
    }
    r.new_color = true;
    r.vertex = e.u;
    r.old_color = coloring.color_of(e.u);
    r.new_color_value = coloring.used + 1;
    coloring.set_color(e.u, r.new_color_value);
    return r;
}

}  // namespace detail

// Pure convenience form: the coloring that results from inserting `e` into a
// graph whose edges are `present`, under `coloring`.
inline Coloring add_edge_greedy(const Graph& full, const std::vector<Edge>& present,
                                const Coloring& coloring, Edge e) {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(full.vertex_count()));
    for (const Edge& p : present) {
        adj[static_cast<std::size_t>(p.u)].push_back(p.v);
        adj[static_cast<std::size_t>(p.v)].push_back(p.u);
    }
    Coloring out = coloring;
    std::vector<int> mark(static_cast<std::size_t>(full.vertex_count()) + 2, 0);
    int stamp = 0;
    detail::insert_edge(adj, out, e, mark, stamp);
    return out;
}

struct RunStats {
    std::int64_t edges_processed = 0;
    std::int64_t regret_events = 0;
    int repair_attempts = 0;
    int rollbacks_accepted = 0;
};

struct TurboLimits {
    bool enable_repair = true;
    int max_repair_attempts = 0;  // 0: four times the reference color count
    RepairLimits repair;
};

struct TurboResult {
    Coloring coloring;
    RunStats stats;
};

// Called after every insertion and after every accepted repair; the flag
// marks the repair calls.
using StepObserver = std::function<void(std::int64_t, const Coloring&, bool)>;

// Incremental greedy coloring with regret-triggered rollback and repair.
// Edges arrive in schedule order; when the regret metric dips below
// |E|/k_best the run virtually rolls back to the latest stable checkpoint and
// asks the repair subroutine to re-add the suffix with one color fewer.
// State mutates only when a repair is accepted.
inline TurboResult dyn_turbo_color(const Graph& g, std::uint64_t seed, int k_best,
                                   const TurboLimits& limits = {}, const Deadline& deadline = {},
                                   const StepObserver& observer = {}) {
    if (k_best < 1) throw std::invalid_argument("reference color count must be positive");
    const VertexId n = g.vertex_count();
    const EdgeSchedule schedule = schedule_edges(g, seed);
    const std::int64_t m = static_cast<std::int64_t>(schedule.order.size());

    TurboResult out;
    out.coloring = Coloring::uniform(n);
    if (n == 0) return out;

    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    std::vector<int> mark(static_cast<std::size_t>(n) + 2, 0);
    int stamp = 0;

    RegretTracker tracker(m, k_best);
    CheckpointLog log(out.coloring);
    std::set<std::pair<std::int64_t, int>> attempted;  // (rollback point, target colors)
    const int attempt_cap =
        limits.max_repair_attempts > 0 ? limits.max_repair_attempts : 4 * k_best;

    for (std::int64_t t = 1; t <= m; ++t) {
        deadline.check();
        const Edge e = schedule.order[static_cast<std::size_t>(t - 1)];
        const InsertResult ins = detail::insert_edge(adj, out.coloring, e, mark, stamp);
        tracker.on_edge(out.coloring.used);
        if (ins.recolored) log.record_diff(t, ins.vertex, ins.old_color, ins.new_color_value);
        if (ins.new_color) log.record_snapshot(t, out.coloring);
        ++out.stats.edges_processed;
        if (observer) observer(t, out.coloring, false);

        if (!limits.enable_repair) continue;
        if (!ins.new_color) continue;  // regret is evaluated right after a color addition
        if (!tracker.is_moment_of_regret()) continue;
        ++out.stats.regret_events;
        if (out.stats.repair_attempts >= attempt_cap) continue;
        const int target = out.coloring.used - 1;
        if (target < 1) continue;

        const std::int64_t j = rollback_point(tracker, log);
        if (!attempted.emplace(j, target).second) continue;  // one try per pair

        ++out.stats.repair_attempts;
        const Coloring base_coloring = log.reconstruct(j);
        const Graph base_graph(n, std::span<const Edge>(schedule.order.data(),
                                                        static_cast<std::size_t>(j)));
        const Graph target_graph(n, std::span<const Edge>(schedule.order.data(),
                                                          static_cast<std::size_t>(t)));
        DgcInstance inst(base_graph, target_graph, base_coloring,
                         2 * static_cast<int>(t - j), target);
        const auto repaired = dgc_solve(inst, limits.repair, deadline);
        if (!repaired) continue;
        if (repaired->coloring.used > target) continue;
        if (!is_proper(target_graph, repaired->coloring)) continue;  // defensive

        out.coloring = repaired->coloring;
        log.reset(t, out.coloring);
        tracker.reset_after_repair(t, out.coloring.used);
        ++out.stats.rollbacks_accepted;
        if (observer) observer(t, out.coloring, true);
    }
    return out;
}

// Plain incremental greedy on the same schedule, no rollback.
inline TurboResult incremental_greedy(const Graph& g, std::uint64_t seed,
                                      const Deadline& deadline = {},
                                      const StepObserver& observer = {}) {
    TurboLimits limits;
    limits.enable_repair = false;
    return dyn_turbo_color(g, seed, 1, limits, deadline, observer);
}

}  // namespace tcol
