// tcol: DIMACS graph coloring front end.
//   tcol color  --input g.col --algo dyn-tc --seed 1 [--out g.assign]
//   tcol bench  --instances dir --csv out.csv [--json out.json] [--refs chi.csv]
//   tcol verify --input g.col --assignment g.assign
// Exit codes: 0 ok, 1 parse failure, 2 internal failure, 3 improper assignment.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcol/tcol.hpp"

namespace fs = std::filesystem;

namespace {

struct ColorArgs {
    std::string input;
    std::string algo = "dyn-tc";
    std::uint64_t seed = 1;
    int k_best = 0;
    double time_limit_s = 0;
    std::string out;
};

struct BenchArgs {
    std::string instances;
    std::vector<std::string> algos;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    int k_best = 0;
    double time_limit_s = 0;
    std::string csv;
    std::string json;
    std::string refs;
    bool zero_times = false;
};

struct VerifyArgs {
    std::string input;
    std::string assignment;
};

std::optional<tcol::ParseResult> parse_or_complain(const std::string& path) {
    try {
        auto result = tcol::parse_dimacs_file(path);
        if (result.stats.duplicate_edges > 0)
            std::cerr << "warning: " << path << ": merged " << result.stats.duplicate_edges
                      << " duplicate edge(s)\n";
        if (result.stats.edge_count_mismatch())
            std::cerr << "warning: " << path << ": p line declares "
                      << result.stats.declared_edges << " edges, found "
                      << result.stats.distinct_edges << " distinct\n";
        return result;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

int run_color(const ColorArgs& args) {
    const auto parsed = parse_or_complain(args.input);
    if (!parsed) return 1;
    const tcol::Graph& g = parsed->graph;

    const auto algo = tcol::parse_algo(args.algo);
    if (!algo) {
        std::cerr << "unknown algorithm: " << args.algo << "\n";
        return 1;
    }
    const tcol::Deadline deadline =
        args.time_limit_s > 0 ? tcol::Deadline::after(args.time_limit_s) : tcol::Deadline::never();

    tcol::Coloring coloring;
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (*algo) {
            case tcol::Algo::greedy_lf: coloring = tcol::greedy_lf(g, args.seed); break;
            case tcol::Algo::greedy_interchange:
                coloring = tcol::greedy_interchange(g, args.seed);
                break;
            case tcol::Algo::edge_greedy:
                coloring = tcol::incremental_greedy(g, args.seed, deadline).coloring;
                break;
            case tcol::Algo::dyn_tc: {
                const int k_best =
                    args.k_best > 0 ? args.k_best : tcol::greedy_lf(g, args.seed).used;
                coloring = tcol::dyn_turbo_color(g, args.seed, k_best, {}, deadline).coloring;
                break;
            }
        }
    } catch (const tcol::Timeout&) {
        std::cerr << "time limit exceeded\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();

    if (!tcol::verify(g, coloring).empty()) {
        std::cerr << "internal verification failure: improper coloring produced\n";
        return 2;
    }
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) {
            std::cerr << "cannot write " << args.out << "\n";
            return 2;
        }
        tcol::write_assignment(out, coloring);
    }
    std::cout << "colors=" << coloring.used << " time_ms=" << ms << "\n";
    return 0;
}

int run_bench(const BenchArgs& args) {
    if (args.instances.empty()) {
        std::cerr << "no instance directory (use --instances or set TCOL_INSTANCES)\n";
        return 1;
    }
    std::vector<fs::path> files;
    try {
        for (const auto& entry : fs::directory_iterator(args.instances))
            if (entry.is_regular_file() && entry.path().extension() == ".col")
                files.push_back(entry.path());
    } catch (const fs::filesystem_error& e) {
        std::cerr << "cannot read instance directory: " << e.what() << "\n";
        return 1;
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .col instances in " << args.instances << "\n";
        return 1;
    }

    tcol::BenchOptions opt;
    if (!args.algos.empty()) {
        opt.algos.clear();
        for (const std::string& name : args.algos) opt.algos.push_back(*tcol::parse_algo(name));
    }
    opt.seeds = args.seeds;
    opt.k_best_override = args.k_best;
    opt.time_limit_s = args.time_limit_s;
    opt.zero_times = args.zero_times;

    std::optional<tcol::RefTable> refs;
    if (!args.refs.empty()) {
        try {
            refs = tcol::RefTable::load_file(args.refs);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
    }

    std::vector<std::pair<std::string, tcol::Graph>> instances;
    std::vector<tcol::BenchRecord> records;
    for (const fs::path& file : files) {
        auto parsed = parse_or_complain(file.string());
        if (parsed) {
            instances.emplace_back(file.stem().string(), std::move(parsed->graph));
        } else {
            tcol::BenchRecord rec;  // the sweep keeps going; the row says why
            rec.instance = file.stem().string();
            rec.algorithm = "-";
            rec.status = tcol::RunStatus::error;
            rec.detail = "parse failure";
            records.push_back(std::move(rec));
        }
    }

    auto swept = tcol::run_bench(instances, opt, refs ? &*refs : nullptr);
    records.insert(records.end(), std::make_move_iterator(swept.begin()),
                   std::make_move_iterator(swept.end()));
    std::sort(records.begin(), records.end(),
              [](const tcol::BenchRecord& a, const tcol::BenchRecord& b) {
                  if (a.instance != b.instance) return a.instance < b.instance;
                  if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
                  return a.seed < b.seed;
              });

    if (!args.csv.empty()) {
        std::ofstream out(args.csv);
        if (!out) {
            std::cerr << "cannot write " << args.csv << "\n";
            return 2;
        }
        tcol::write_csv(out, records);
    }
    if (!args.json.empty()) {
        std::ofstream out(args.json);
        if (!out) {
            std::cerr << "cannot write " << args.json << "\n";
            return 2;
        }
        tcol::write_json(out, records);
    }
    tcol::write_summary(std::cout, tcol::summarize(records), opt.algos);
    return 0;
}

int run_verify(const VerifyArgs& args) {
    const auto parsed = parse_or_complain(args.input);
    if (!parsed) return 1;
    const tcol::Graph& g = parsed->graph;

    tcol::Coloring coloring;
    try {
        coloring = tcol::read_assignment_file(args.assignment, g.vertex_count());
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << args.assignment << ": " << e.what() << "\n";
        return 1;
    }

    const auto conflicts = tcol::verify(g, coloring);
    if (conflicts.empty()) {
        std::cout << "OK colors=" << coloring.distinct_colors() << "\n";
        return 0;
    }
    const std::size_t shown = std::min<std::size_t>(conflicts.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        const tcol::Edge e = g.edge(static_cast<std::size_t>(conflicts[i]));
        std::cout << "conflict " << e.u + 1 << "-" << e.v + 1
                  << " color=" << coloring.color_of(e.u) << "\n";
    }
    if (conflicts.size() > shown)
        std::cout << "... and " << conflicts.size() - shown << " more\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph coloring solver and benchmark harness"};
    app.require_subcommand(1);

    const std::vector<std::string> algo_names = {"greedy-lf", "greedy-interchange", "edge-greedy",
                                                 "dyn-tc"};

    ColorArgs color_args;
    CLI::App* color = app.add_subcommand("color", "color one instance and report the count");
    color->add_option("--input", color_args.input, "DIMACS .col file")->required();
    color->add_option("--algo", color_args.algo, "algorithm")
        ->check(CLI::IsMember(algo_names))
        ->capture_default_str();
    color->add_option("--seed", color_args.seed, "RNG seed")->capture_default_str();
    color->add_option("--k-best", color_args.k_best, "reference color count for the regret test");
    color->add_option("--time-limit-s", color_args.time_limit_s, "wall-clock limit in seconds");
    color->add_option("--out", color_args.out, "write the assignment file here");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "sweep instances x algorithms x seeds");
    bench->add_option("--instances", bench_args.instances, "directory of .col files")
        ->envname("TCOL_INSTANCES");
    bench->add_option("--algo", bench_args.algos, "algorithms to run (repeatable)")
        ->check(CLI::IsMember(algo_names));
    bench->add_option("--seeds", bench_args.seeds, "seeds to sweep")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--k-best", bench_args.k_best, "override the dyn-tc reference color count");
    bench->add_option("--time-limit-s", bench_args.time_limit_s, "per-cell limit in seconds");
    bench->add_option("--csv", bench_args.csv, "write records as CSV");
    bench->add_option("--json", bench_args.json, "write records as JSON");
    bench->add_option("--refs", bench_args.refs, "reference chromatic numbers (name,chi CSV)");
    bench->add_flag("--zero-times", bench_args.zero_times,
                    "report zero times for byte-stable output");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check an assignment against a graph");
    verify->add_option("--input", verify_args.input, "DIMACS .col file")->required();
    verify->add_option("--assignment", verify_args.assignment, "assignment file")->required();

    CLI11_PARSE(app, argc, argv);

    if (color->parsed()) return run_color(color_args);
    if (bench->parsed()) return run_bench(bench_args);
    return run_verify(verify_args);
}
