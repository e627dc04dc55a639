#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "tcol/coloring.hpp"
#include "tcol/graph.hpp"

namespace tcol {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

struct ParseStats {
    std::int64_t declared_edges = 0;   // m from the p line
    std::int64_t distinct_edges = 0;
    std::int64_t duplicate_edges = 0;  // merged silently, counted here

    bool edge_count_mismatch() const { return declared_edges != distinct_edges; }
};

struct ParseResult {
    Graph graph;
    ParseStats stats;
};

namespace detail {

inline bool parse_int(const std::string& tok, std::int64_t& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(std::move(t));
    return toks;
}

}  // namespace detail

// Reads the standard DIMACS `.col` convention: `c` comment lines, one
// `p edge <n> <m>` line, then `e <u> <v>` lines with 1-based endpoints.
// Duplicate edges (either orientation) are merged and counted.
inline ParseResult parse_dimacs(std::istream& in) {
    std::optional<VertexId> n;
    std::int64_t declared_m = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::int64_t duplicates = 0;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto toks = detail::tokens_of(raw);
        if (toks.empty()) continue;
        const std::string& kind = toks[0];
        if (kind == "c") continue;
        if (kind == "p") {
            if (n) throw ParseError(line_no, "duplicate problem line");
            if (toks.size() != 4) throw ParseError(line_no, "problem line needs 'p edge <n> <m>'");
            if (toks[1] != "edge" && toks[1] != "edges" && toks[1] != "col")
                throw ParseError(line_no, "unknown problem format '" + toks[1] + "'");
            std::int64_t nv = 0, ne = 0;
            if (!detail::parse_int(toks[2], nv) || !detail::parse_int(toks[3], ne))
                throw ParseError(line_no, "non-integer token in problem line");
            if (nv <= 0) throw ParseError(line_no, "vertex count must be positive");
            if (ne < 0) throw ParseError(line_no, "negative edge count");
            n = static_cast<VertexId>(nv);
            declared_m = ne;
            continue;
        }
        if (kind == "e") {
            if (!n) throw ParseError(line_no, "edge before problem line");
            if (toks.size() != 3) throw ParseError(line_no, "edge line needs 'e <u> <v>'");
            std::int64_t a = 0, b = 0;
            if (!detail::parse_int(toks[1], a) || !detail::parse_int(toks[2], b))
                throw ParseError(line_no, "non-integer endpoint");
            if (a < 1 || a > *n)
                throw ParseError(line_no, "endpoint " + std::to_string(a) + " out of range [1, " +
                                              std::to_string(*n) + "]");
            if (b < 1 || b > *n)
                throw ParseError(line_no, "endpoint " + std::to_string(b) + " out of range [1, " +
                                              std::to_string(*n) + "]");
            if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
            const Edge e(static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1));
            const std::uint64_t key =
                (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
            if (!seen.insert(key).second) {
                ++duplicates;
                continue;
            }
            edges.push_back(e);
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
    if (!n) throw ParseError(line_no, "missing problem line");

    ParseStats stats;
    stats.declared_edges = declared_m;
    stats.distinct_edges = static_cast<std::int64_t>(edges.size());
    stats.duplicate_edges = duplicates;
    return ParseResult{Graph(*n, edges), stats};
}

inline ParseResult parse_dimacs(const std::string& text) {
    std::istringstream iss(text);
    return parse_dimacs(iss);
}

inline ParseResult parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_dimacs(in);
}

// Emits `p edge n m` followed by one `e u v` line per edge, 1-based, u < v,
// in edge-list order.
inline void write_col(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline std::string to_col(const Graph& g) {
    std::ostringstream oss;
    write_col(oss, g);
    return oss.str();
}

// Assignment files: one `<1-based vertex id> <color>` line per vertex, ids ascending.
inline void write_assignment(std::ostream& out, const Coloring& c) {
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        out << v + 1 << ' ' << c.colors[v] << '\n';
}

inline Coloring read_assignment(std::istream& in, VertexId vertex_count) {
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(vertex_count), 0);
    std::string raw;
    int line_no = 0;
    VertexId expect = 1;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto toks = detail::tokens_of(raw);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw ParseError(line_no, "assignment line needs '<vertex> <color>'");
        std::int64_t vid = 0, col = 0;
        if (!detail::parse_int(toks[0], vid) || !detail::parse_int(toks[1], col))
            throw ParseError(line_no, "non-integer token");
        if (vid != expect)
            throw ParseError(line_no, "expected vertex " + std::to_string(expect) + ", got " +
                                          std::to_string(vid));
        if (col < 1) throw ParseError(line_no, "colors are 1-based");
        c.colors[static_cast<std::size_t>(vid - 1)] = static_cast<int>(col);
        ++expect;
    }
    if (expect != vertex_count + 1)
        throw ParseError(line_no, "assignment covers " + std::to_string(expect - 1) + " of " +
                                      std::to_string(vertex_count) + " vertices");
    c.used = 0;
    for (int col : c.colors) c.used = std::max(c.used, col);
    return c;
}

inline Coloring read_assignment_file(const std::string& path, VertexId vertex_count) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return read_assignment(in, vertex_count);
}

}  // namespace tcol
