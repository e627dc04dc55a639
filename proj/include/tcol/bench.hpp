#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tcol/coloring.hpp"
#include "tcol/deadline.hpp"
#include "tcol/graph.hpp"
#include "tcol/greedy.hpp"
#include "tcol/turbo.hpp"

namespace tcol {

enum class Algo { greedy_lf, greedy_interchange, edge_greedy, dyn_tc };

inline const std::vector<Algo>& all_algos() {
    static const std::vector<Algo> algos{Algo::greedy_lf, Algo::greedy_interchange,
                                         Algo::edge_greedy, Algo::dyn_tc};
    return algos;
}

inline std::string to_string(Algo a) {
    switch (a) {
        case Algo::greedy_lf: return "greedy-lf";
        case Algo::greedy_interchange: return "greedy-interchange";
        case Algo::edge_greedy: return "edge-greedy";
        case Algo::dyn_tc: return "dyn-tc";
    }
    return "?";
}

inline std::optional<Algo> parse_algo(const std::string& s) {
    for (Algo a : all_algos())
        if (to_string(a) == s) return a;
    return std::nullopt;
}

enum class RunStatus { ok, timeout, error };

inline std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::ok: return "ok";
        case RunStatus::timeout: return "timeout";
        case RunStatus::error: return "error";
    }
    return "?";
}

// One reference color count. A plain value is a proven chromatic number and a
// hard lower bound; a parenthesized value is the best reported in the
// literature without a proof of minimality.
struct RefEntry {
    int chi = 0;
    bool exact = true;

    std::string render() const {
        return exact ? std::to_string(chi) : "(" + std::to_string(chi) + ")";
    }
};

// Instance-name-keyed reference table. Lookups are case-insensitive and
// treat '_' and '.' as the same, so file stems like r125_1 find R125.1.
class RefTable {
public:
    static std::string normalize(std::string s) {
        for (char& ch : s) {
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            if (ch == '_') ch = '.';
        }
        return s;
    }

    void insert(const std::string& name, RefEntry entry) { by_key_[normalize(name)] = entry; }

    std::optional<RefEntry> lookup(const std::string& name) const {
        auto it = by_key_.find(normalize(name));
        if (it == by_key_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return by_key_.size(); }

    // Lines of `name,chi`, chi either `8` or `(17)`; '#' comments and blank
    // lines are skipped, as is a literal header row.
    static RefTable load(std::istream& in) {
        RefTable table;
        std::string line;
        int lineno = 0;
        bool seen_data = false;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::runtime_error("references line " + std::to_string(lineno) +
                                         ": expected name,value");
            std::string name = line.substr(0, comma);
            std::string value = line.substr(comma + 1);
            const auto strip = [](std::string& s) {
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            };
            strip(name);
            strip(value);
            if (!seen_data && (value == "chi" || value == "reference_chi")) continue;
            seen_data = true;
            RefEntry entry;
            if (!value.empty() && value.front() == '(' && value.back() == ')') {
                entry.exact = false;
                value = value.substr(1, value.size() - 2);
            }
            try {
                std::size_t pos = 0;
                entry.chi = std::stoi(value, &pos);
                if (pos != value.size() || entry.chi < 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::runtime_error("references line " + std::to_string(lineno) +
                                         ": bad color count '" + value + "'");
            }
            table.insert(name, entry);
        }
        return table;
    }

    static RefTable load_file(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open references file: " + path.string());
        return load(in);
    }

private:
    std::map<std::string, RefEntry> by_key_;
};

struct BenchRecord {
    std::string instance;
    VertexId n = 0;
    std::int64_t m = 0;
    std::string algorithm;
    std::uint64_t seed = 0;
    int colors = 0;  // meaningful only when status is ok
    std::int64_t time_ms = 0;
    std::int64_t regret_events = 0;
    int rollbacks_accepted = 0;
    std::optional<RefEntry> reference_chi;
    RunStatus status = RunStatus::ok;
    std::string detail;  // diagnostic for error rows; not a CSV column
};

struct BenchOptions {
    std::vector<Algo> algos = all_algos();
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    double time_limit_s = 0;  // 0: unlimited
    int k_best_override = 0;  // 0: greedy-lf with the same seed
    bool zero_times = false;  // report 0 ms everywhere, for byte-stable output
    TurboLimits turbo;
};

// Runs one (instance, algorithm, seed) cell. Every success is re-verified
// against the graph before it is reported; timeouts and exceptions become
// status rows rather than aborting the sweep.
inline BenchRecord run_cell(const std::string& name, const Graph& g, Algo algo,
                            std::uint64_t seed, const BenchOptions& opt,
                            const RefTable* refs = nullptr) {
    BenchRecord rec;
    rec.instance = name;
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.algorithm = to_string(algo);
    rec.seed = seed;
    if (refs) rec.reference_chi = refs->lookup(name);

    const Deadline deadline =
        opt.time_limit_s > 0 ? Deadline::after(opt.time_limit_s) : Deadline::never();
    const auto start = std::chrono::steady_clock::now();
    try {
        Coloring coloring;
        switch (algo) {
            case Algo::greedy_lf: coloring = greedy_lf(g, seed); break;
            case Algo::greedy_interchange: coloring = greedy_interchange(g, seed); break;
            case Algo::edge_greedy: coloring = incremental_greedy(g, seed, deadline).coloring; break;
            case Algo::dyn_tc: {
                const int k_best =
                    opt.k_best_override > 0 ? opt.k_best_override : greedy_lf(g, seed).used;
                deadline.check();
                const TurboResult res = dyn_turbo_color(g, seed, k_best, opt.turbo, deadline);
                coloring = res.coloring;
                rec.regret_events = res.stats.regret_events;
                rec.rollbacks_accepted = res.stats.rollbacks_accepted;
                break;
            }
        }
        deadline.check();
        if (!verify(g, coloring).empty())
            throw std::logic_error("result failed verification against the graph");
        if (rec.reference_chi && rec.reference_chi->exact && coloring.used < rec.reference_chi->chi)
            throw std::logic_error("result beats a proven chromatic number; verification bug");
        rec.colors = coloring.used;
        rec.status = RunStatus::ok;
    } catch (const Timeout&) {
        rec.status = RunStatus::timeout;
        rec.colors = 0;
    } catch (const std::exception& e) {
        rec.status = RunStatus::error;
        rec.colors = 0;
        rec.detail = e.what();
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    rec.time_ms =
        opt.zero_times
            ? 0
            : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return rec;
}

// Full sweep over instances x algorithms x seeds, collected and sorted so the
// output does not depend on execution order.
inline std::vector<BenchRecord> run_bench(const std::vector<std::pair<std::string, Graph>>& instances,
                                          const BenchOptions& opt, const RefTable* refs = nullptr) {
    std::vector<BenchRecord> records;
    for (const auto& [name, g] : instances)
        for (Algo algo : opt.algos)
            for (std::uint64_t seed : opt.seeds)
                records.push_back(run_cell(name, g, algo, seed, opt, refs));
    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
        return a.seed < b.seed;
    });
    return records;
}

inline void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "instance,n,m,algorithm,seed,colors,time_ms,regret_events,rollbacks_accepted,"
           "reference_chi,status\n";
    for (const BenchRecord& r : records) {
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.seed
            << ',';
        if (r.status == RunStatus::ok) out << r.colors;
        out << ',' << r.time_ms << ',' << r.regret_events << ',' << r.rollbacks_accepted << ',';
        if (r.reference_chi) out << r.reference_chi->render();
        out << ',' << to_string(r.status) << '\n';
    }
}

inline nlohmann::ordered_json to_json(const std::vector<BenchRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BenchRecord& r : records) {
        nlohmann::ordered_json row;
        row["instance"] = r.instance;
        row["n"] = r.n;
        row["m"] = r.m;
        row["algorithm"] = r.algorithm;
        row["seed"] = r.seed;
        if (r.status == RunStatus::ok)
            row["colors"] = r.colors;
        else
            row["colors"] = nullptr;
        row["time_ms"] = r.time_ms;
        row["regret_events"] = r.regret_events;
        row["rollbacks_accepted"] = r.rollbacks_accepted;
        if (r.reference_chi) {
            row["reference_chi"] = r.reference_chi->chi;
            row["reference_exact"] = r.reference_chi->exact;
        } else {
            row["reference_chi"] = nullptr;
        }
        row["status"] = to_string(r.status);
        if (!r.detail.empty()) row["detail"] = r.detail;
        arr.push_back(std::move(row));
    }
    return arr;
}

inline void write_json(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << to_json(records).dump(2) << '\n';
}

// Best-of-seeds per instance and algorithm, the shape of the comparison
// tables: one row per instance, one column per algorithm.
struct SummaryRow {
    std::string instance;
    std::optional<RefEntry> reference_chi;
    std::map<std::string, int> best;  // algorithm -> best colors over seeds
};

inline std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
    std::map<std::string, SummaryRow> rows;
    for (const BenchRecord& r : records) {
        SummaryRow& row = rows[r.instance];
        row.instance = r.instance;
        if (r.reference_chi) row.reference_chi = r.reference_chi;
        if (r.status != RunStatus::ok) continue;
        auto it = row.best.find(r.algorithm);
        if (it == row.best.end() || r.colors < it->second) row.best[r.algorithm] = r.colors;
    }
    std::vector<SummaryRow> out;
    out.reserve(rows.size());
    for (auto& [_, row] : rows) out.push_back(std::move(row));
    return out;
}

inline void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows,
                          const std::vector<Algo>& algos) {
    std::size_t name_w = std::string("instance").size();
    for (const SummaryRow& r : rows) name_w = std::max(name_w, r.instance.size());
    out << std::string(name_w - 8, ' ') << "instance    chi";
    for (Algo a : algos) {
        const std::string h = to_string(a);
        out << "  " << h;
    }
    out << '\n';
    for (const SummaryRow& r : rows) {
        out << std::string(name_w - r.instance.size(), ' ') << r.instance;
        std::string chi = r.reference_chi ? r.reference_chi->render() : "-";
        out << std::string(chi.size() < 7 ? 7 - chi.size() : 1, ' ') << chi;
        for (Algo a : algos) {
            const std::string h = to_string(a);
            auto it = r.best.find(h);
            const std::string cell = it == r.best.end() ? "-" : std::to_string(it->second);
            out << std::string(h.size() + 2 - std::min(cell.size(), h.size() + 1), ' ') << cell;
        }
        out << '\n';
    }
}

}  // namespace tcol
