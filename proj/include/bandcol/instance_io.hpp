#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bandcol/graph.hpp"
#include "bandcol/types.hpp"

namespace bandcol {

// Instance files are DIMACS-style text:
//   c <comment>                 skipped
//   p edge <n> <m>              exactly one, before any edge line
//   e <u> <v> <d>               edge with 1-based endpoints and distance >= 1
//   n <v> <w>                   vertex weight (multicoloring instances only)
// Self-loop lines "e v v d" carry the per-vertex distance d(v,v) of
// multicoloring instances and are rejected in plain instances.  Parsing is
// whitespace-tolerant and accepts both LF and CRLF endings.

WeightedGraph parse_bcp(std::istream& in);
WeightedGraph parse_bcp_file(const std::string& path);

// A multicoloring instance: the base graph plus per-vertex color demand
// w(v) and self-distance d(v,v), carried by the graph object itself.
struct BmcpInstance {
    WeightedGraph graph;
};

// Weights come from "n <v> <w>" lines in the instance, from a separate
// weights stream of "<v> <w>" lines, or both; every vertex needs exactly one
// weight.  A vertex with w > 1 but no self-loop line gets loop_default as
// d(v,v) and a note in *warnings.
BmcpInstance parse_bmcp(std::istream& instance, std::istream* weights,
                        std::int32_t loop_default = 1,
                        std::vector<std::string>* warnings = nullptr);
BmcpInstance parse_bmcp_file(const std::string& instance_path,
                             const std::optional<std::string>& weights_path,
                             std::int32_t loop_default = 1,
                             std::vector<std::string>* warnings = nullptr);

// Relates the clique expansion of a multicoloring instance back to the
// original vertices: copies of vertex v are contiguous, ordered by v then
// copy index.
struct ExpansionMap {
    struct Origin {
        Vertex vertex;
        std::int32_t copy;
    };
    std::vector<Origin> origin_of;   // expanded id -> original vertex and copy index
    std::vector<Vertex> first_copy;  // original vertex -> first expanded id
    Vertex expanded_vertices() const { return static_cast<Vertex>(origin_of.size()); }
};

// Splits every vertex v into a clique of w(v) copies with internal distance
// d(v,v); each original edge (u,v,d) connects every copy pair at distance d.
// The result is a plain bandwidth coloring instance with sum(w) vertices.
std::pair<WeightedGraph, ExpansionMap> expand_to_bcp(const BmcpInstance& inst);

// One color set per original vertex, sorted ascending.
struct Multicoloring {
    std::vector<std::vector<Color>> colors;
    Color span() const;
};

// Checks a multicoloring directly against the unexpanded constraints:
// every vertex has exactly w(v) distinct colors, colors of the same vertex
// differ by at least d(v,v), and colors across each edge differ by at least
// the edge distance.  Returns the first violation, or nullopt if legal.
std::optional<std::string> check_multicoloring(const BmcpInstance& inst, const Multicoloring& mc);

// Groups an expanded-graph coloring by origin and validates it as a
// multicoloring.  Throws std::invalid_argument carrying the first violated
// constraint if the input was not feasible.
Multicoloring lift_solution(const BmcpInstance& inst, const ExpansionMap& map,
                            const Coloring& coloring);

// Plain-instance feasibility check over the edge list, independent of the
// penalty kernels.  Returns the first violated edge, or nullopt if legal.
std::optional<std::string> check_bcp_solution(const WeightedGraph& g, const Coloring& coloring);

// Solution files:
//   s <span>
//   v <vertex> <color>     one line per vertex, ascending 1-based ids
// write/read round-trips bit-exactly.
void write_solution(std::ostream& out, const Coloring& coloring);
std::string solution_to_string(const Coloring& coloring);
Coloring read_solution(std::istream& in, Vertex expected_vertices);

}  // namespace bandcol
