#include "bandcol/instance_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "bandcol/coloring.hpp"

namespace bandcol {

namespace {

struct RawInstance {
    Vertex n = 0;
    std::vector<Edge> edges;                        // without self-loops
    std::map<Vertex, std::int32_t> loop_dist;       // from "e v v d" lines
    std::map<Vertex, std::int32_t> weights;         // from "n v w" lines
    int last_line = 0;
};

bool next_token(std::istringstream& ss, std::string& tok) { return static_cast<bool>(ss >> tok); }

std::int64_t parse_int(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
    return value;
}

RawInstance parse_instance(std::istream& in, bool allow_multicolor_lines) {
    RawInstance raw;
    bool have_header = false;
    std::int64_t declared_edges = 0;
    std::int64_t edge_lines = 0;
    std::set<std::pair<Vertex, Vertex>> seen_edges;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string head;
        if (!next_token(ss, head)) continue;  // blank line
        if (head == "c") continue;

        if (head == "p") {
            if (have_header) throw ParseError(line_no, "duplicate problem line");
            std::string kind, ntok, mtok;
            if (!next_token(ss, kind) || kind != "edge")
                throw ParseError(line_no, "problem line must read 'p edge <n> <m>'");
            if (!next_token(ss, ntok) || !next_token(ss, mtok))
                throw ParseError(line_no, "problem line must read 'p edge <n> <m>'");
            const std::int64_t n = parse_int(ntok, line_no, "vertex count");
            declared_edges = parse_int(mtok, line_no, "edge count");
            if (n < 1) throw ParseError(line_no, "vertex count must be positive");
            if (declared_edges < 0) throw ParseError(line_no, "edge count must be nonnegative");
            raw.n = static_cast<Vertex>(n);
            have_header = true;
            continue;
        }

        if (head == "e") {
            if (!have_header) throw ParseError(line_no, "edge line before problem line");
            std::string utok, vtok, dtok;
            if (!next_token(ss, utok) || !next_token(ss, vtok) || !next_token(ss, dtok))
                throw ParseError(line_no, "edge line must read 'e <u> <v> <d>'");
            const std::int64_t u = parse_int(utok, line_no, "vertex id");
            const std::int64_t v = parse_int(vtok, line_no, "vertex id");
            const std::int64_t d = parse_int(dtok, line_no, "distance");
            if (u < 1 || u > raw.n || v < 1 || v > raw.n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(raw.n));
            if (d < 1) throw ParseError(line_no, "distance must be >= 1");
            ++edge_lines;
            if (u == v) {
                if (!allow_multicolor_lines)
                    throw ParseError(line_no, "self-loop on vertex " + std::to_string(u) +
                                                  " is not allowed in a plain instance");
                const auto vertex = static_cast<Vertex>(u - 1);
                if (!raw.loop_dist.emplace(vertex, static_cast<std::int32_t>(d)).second)
                    throw ParseError(line_no, "duplicate self-loop for vertex " + std::to_string(u));
            } else {
                const auto a = static_cast<Vertex>(std::min(u, v) - 1);
                const auto b = static_cast<Vertex>(std::max(u, v) - 1);
                if (!seen_edges.emplace(a, b).second)
                    throw ParseError(line_no, "duplicate edge (" + std::to_string(u) + "," +
                                                  std::to_string(v) + ")");
                raw.edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                                     static_cast<std::int32_t>(d)});
            }
            continue;
        }

        if (head == "n") {
            if (!allow_multicolor_lines)
                throw ParseError(line_no, "vertex weight line in a plain instance");
            if (!have_header) throw ParseError(line_no, "weight line before problem line");
            std::string vtok, wtok;
            if (!next_token(ss, vtok) || !next_token(ss, wtok))
                throw ParseError(line_no, "weight line must read 'n <vertex> <weight>'");
            const std::int64_t v = parse_int(vtok, line_no, "vertex id");
            const std::int64_t w = parse_int(wtok, line_no, "weight");
            if (v < 1 || v > raw.n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(raw.n));
            if (w < 1) throw ParseError(line_no, "vertex weight must be >= 1");
            if (!raw.weights.emplace(static_cast<Vertex>(v - 1), static_cast<std::int32_t>(w)).second)
                throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v));
            continue;
        }

        throw ParseError(line_no, "unrecognized line type '" + head + "'");
    }

    if (!have_header) throw ParseError(line_no, "missing 'p edge <n> <m>' line");
    if (edge_lines != declared_edges)
        throw ParseError(line_no, "edge count mismatch: header declares " +
                                      std::to_string(declared_edges) + ", file has " +
                                      std::to_string(edge_lines));
    raw.last_line = line_no;
    return raw;
}

void parse_weight_stream(std::istream& in, Vertex n, std::map<Vertex, std::int32_t>& weights) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string vtok;
        if (!next_token(ss, vtok)) continue;
        if (vtok == "c") continue;
        std::string wtok;
        if (!next_token(ss, wtok))
            throw ParseError(line_no, "weight line must read '<vertex> <weight>'");
        const std::int64_t v = parse_int(vtok, line_no, "vertex id");
        const std::int64_t w = parse_int(wtok, line_no, "weight");
        if (v < 1 || v > n)
            throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
        if (w < 1) throw ParseError(line_no, "vertex weight must be >= 1");
        if (!weights.emplace(static_cast<Vertex>(v - 1), static_cast<std::int32_t>(w)).second)
            throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v));
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return in;
}

}  // namespace

WeightedGraph parse_bcp(std::istream& in) {
    RawInstance raw = parse_instance(in, /*allow_multicolor_lines=*/false);
    try {
        return WeightedGraph(raw.n, std::move(raw.edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(raw.last_line, e.what());
    }
}

WeightedGraph parse_bcp_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_bcp(in);
}

BmcpInstance parse_bmcp(std::istream& instance, std::istream* weights, std::int32_t loop_default,
                        std::vector<std::string>* warnings) {
    if (loop_default < 1) throw ParseError(0, "loop default must be >= 1");
    RawInstance raw = parse_instance(instance, /*allow_multicolor_lines=*/true);
    if (weights) parse_weight_stream(*weights, raw.n, raw.weights);

    std::vector<std::int32_t> mult(raw.n, 0);
    for (const auto& [v, w] : raw.weights) mult[v] = w;
    for (Vertex v = 0; v < raw.n; ++v)
        if (mult[v] == 0)
            throw ParseError(0, "missing weight for vertex " + std::to_string(v + 1));

    std::vector<std::int32_t> loops(raw.n, 0);
    for (Vertex v = 0; v < raw.n; ++v) {
        auto it = raw.loop_dist.find(v);
        if (it != raw.loop_dist.end()) {
            loops[v] = it->second;
        } else {
            loops[v] = loop_default;
            if (mult[v] > 1 && warnings)
                warnings->push_back("vertex " + std::to_string(v + 1) + " has weight " +
                                    std::to_string(mult[v]) + " but no self-loop line; using d(v,v)=" +
                                    std::to_string(loop_default));
        }
    }

    try {
        return BmcpInstance{
            WeightedGraph(raw.n, std::move(raw.edges), std::move(mult), std::move(loops))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(raw.last_line, e.what());
    }
}

BmcpInstance parse_bmcp_file(const std::string& instance_path,
                             const std::optional<std::string>& weights_path,
                             std::int32_t loop_default, std::vector<std::string>* warnings) {
    auto in = open_or_throw(instance_path);
    if (weights_path) {
        auto w = open_or_throw(*weights_path);
        return parse_bmcp(in, &w, loop_default, warnings);
    }
    return parse_bmcp(in, nullptr, loop_default, warnings);
}

std::pair<WeightedGraph, ExpansionMap> expand_to_bcp(const BmcpInstance& inst) {
    const WeightedGraph& g = inst.graph;
    if (!g.is_multicolor())
        throw std::invalid_argument("expand_to_bcp needs a multicoloring instance");

    ExpansionMap map;
    map.first_copy.resize(g.num_vertices());
    std::int64_t total = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        map.first_copy[v] = static_cast<Vertex>(total);
        total += g.multiplicity(v);
    }
    map.origin_of.reserve(total);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (std::int32_t i = 0; i < g.multiplicity(v); ++i) map.origin_of.push_back({v, i});

    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const Vertex base = map.first_copy[v];
        const std::int32_t w = g.multiplicity(v);
        for (std::int32_t i = 0; i < w; ++i)
            for (std::int32_t j = i + 1; j < w; ++j)
                edges.push_back({base + i, base + j, g.loop_dist(v)});
    }
    const auto eu = g.edge_u();
    const auto ev = g.edge_v();
    const auto ed = g.edge_dist();
    for (std::size_t e = 0; e < eu.size(); ++e) {
        const Vertex bu = map.first_copy[eu[e]];
        const Vertex bv = map.first_copy[ev[e]];
        for (std::int32_t i = 0; i < g.multiplicity(eu[e]); ++i)
            for (std::int32_t j = 0; j < g.multiplicity(ev[e]); ++j)
                edges.push_back({bu + i, bv + j, ed[e]});
    }

    return {WeightedGraph(static_cast<Vertex>(total), std::move(edges)), std::move(map)};
}

Color Multicoloring::span() const {
    Color best = 0;
    for (const auto& set : colors)
        for (Color c : set) best = std::max(best, c);
    return best;
}

std::optional<std::string> check_multicoloring(const BmcpInstance& inst, const Multicoloring& mc) {
    const WeightedGraph& g = inst.graph;
    if (mc.colors.size() != static_cast<std::size_t>(g.num_vertices()))
        return "multicoloring covers " + std::to_string(mc.colors.size()) + " vertices, expected " +
               std::to_string(g.num_vertices());

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& set = mc.colors[v];
        if (static_cast<std::int32_t>(set.size()) != g.multiplicity(v))
            return "vertex " + std::to_string(v + 1) + " has " + std::to_string(set.size()) +
                   " colors, needs " + std::to_string(g.multiplicity(v));
        for (Color c : set)
            if (c < 1) return "vertex " + std::to_string(v + 1) + " uses color " + std::to_string(c);
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (std::abs(set[i] - set[j]) < g.loop_dist(v))
                    return "vertex " + std::to_string(v + 1) + ": colors " + std::to_string(set[i]) +
                           " and " + std::to_string(set[j]) + " differ by less than d(v,v)=" +
                           std::to_string(g.loop_dist(v));
    }

    const auto eu = g.edge_u();
    const auto ev = g.edge_v();
    const auto ed = g.edge_dist();
    for (std::size_t e = 0; e < eu.size(); ++e) {
        for (Color cu : mc.colors[eu[e]])
            for (Color cv : mc.colors[ev[e]])
                if (std::abs(cu - cv) < ed[e])
                    return "edge (" + std::to_string(eu[e] + 1) + "," + std::to_string(ev[e] + 1) +
                           "): colors " + std::to_string(cu) + " and " + std::to_string(cv) +
                           " differ by less than d=" + std::to_string(ed[e]);
    }
    return std::nullopt;
}

Multicoloring lift_solution(const BmcpInstance& inst, const ExpansionMap& map,
                            const Coloring& coloring) {
    if (coloring.size() != map.origin_of.size())
        throw std::invalid_argument("coloring length does not match the expanded instance");

    Multicoloring mc;
    mc.colors.resize(inst.graph.num_vertices());
    for (std::size_t i = 0; i < coloring.size(); ++i)
        mc.colors[map.origin_of[i].vertex].push_back(coloring[i]);
    for (auto& set : mc.colors) std::sort(set.begin(), set.end());

    if (auto violation = check_multicoloring(inst, mc))
        throw std::invalid_argument("expanded coloring is not feasible: " + *violation);
    return mc;
}

std::optional<std::string> check_bcp_solution(const WeightedGraph& g, const Coloring& coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.num_vertices()))
        return "solution covers " + std::to_string(coloring.size()) + " vertices, expected " +
               std::to_string(g.num_vertices());
    for (Color c : coloring)
        if (c < 1) return "color " + std::to_string(c) + " is not a positive integer";

    const auto eu = g.edge_u();
    const auto ev = g.edge_v();
    const auto ed = g.edge_dist();
    for (std::size_t e = 0; e < eu.size(); ++e) {
        const Color cu = coloring[eu[e]];
        const Color cv = coloring[ev[e]];
        if (std::abs(cu - cv) < ed[e])
            return "edge (" + std::to_string(eu[e] + 1) + "," + std::to_string(ev[e] + 1) +
                   "): |" + std::to_string(cu) + "-" + std::to_string(cv) + "| < required distance " +
                   std::to_string(ed[e]);
    }
    return std::nullopt;
}

void write_solution(std::ostream& out, const Coloring& coloring) {
    out << "s " << max_color(coloring) << "\n";
    for (std::size_t v = 0; v < coloring.size(); ++v)
        out << "v " << v + 1 << " " << coloring[v] << "\n";
}

std::string solution_to_string(const Coloring& coloring) {
    std::ostringstream out;
    write_solution(out, coloring);
    return out.str();
}

Coloring read_solution(std::istream& in, Vertex expected_vertices) {
    Coloring colors(expected_vertices, 0);
    std::vector<bool> seen(expected_vertices, false);
    std::optional<Color> declared_span;
    std::string line;
    int line_no = 0;
    int listed = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string head;
        if (!next_token(ss, head)) continue;
        if (head == "c") continue;
        if (head == "s") {
            if (declared_span) throw ParseError(line_no, "duplicate span line");
            std::string tok;
            if (!next_token(ss, tok)) throw ParseError(line_no, "span line must read 's <span>'");
            declared_span = static_cast<Color>(parse_int(tok, line_no, "span"));
            continue;
        }
        if (head == "v") {
            std::string vtok, ctok;
            if (!next_token(ss, vtok) || !next_token(ss, ctok))
                throw ParseError(line_no, "vertex line must read 'v <vertex> <color>'");
            const std::int64_t v = parse_int(vtok, line_no, "vertex id");
            const std::int64_t c = parse_int(ctok, line_no, "color");
            if (v < 1 || v > expected_vertices)
                throw ParseError(line_no,
                                 "vertex id out of range 1.." + std::to_string(expected_vertices));
            if (c < 1) throw ParseError(line_no, "color must be >= 1");
            if (seen[v - 1]) throw ParseError(line_no, "duplicate vertex " + std::to_string(v));
            seen[v - 1] = true;
            colors[v - 1] = static_cast<Color>(c);
            ++listed;
            continue;
        }
        throw ParseError(line_no, "unrecognized line type '" + head + "'");
    }

    if (listed != expected_vertices)
        throw ParseError(line_no, "solution lists " + std::to_string(listed) + " of " +
                                      std::to_string(expected_vertices) + " vertices");
    if (declared_span && *declared_span != max_color(colors))
        throw ParseError(line_no, "declared span " + std::to_string(*declared_span) +
                                      " does not match maximum color " +
                                      std::to_string(max_color(colors)));
    return colors;
}

}  // namespace bandcol
