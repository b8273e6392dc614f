#pragma once

#include "bandcol/graph.hpp"
#include "bandcol/types.hpp"

namespace bandcol {

// Total penalty of a coloring: sum over edges of max(0, d(u,v) - |c(u)-c(v)|).
// Zero exactly when the coloring is a legal bandwidth coloring.
std::int64_t evaluate(const WeightedGraph& g, const Coloring& coloring);

// Per-vertex share of the penalty: sum over neighbors j of v of
// max(0, d(v,j) - |c(v)-c(j)|).  Summing over all vertices double-counts
// every edge, so the vertex values add up to exactly twice evaluate().
std::int64_t vertex_conflicts(const WeightedGraph& g, const Coloring& coloring, Vertex v);

bool is_feasible(const WeightedGraph& g, const Coloring& coloring);

// Maximum color used; colors start at 1, so this is also the span.
Color max_color(const Coloring& coloring);

}  // namespace bandcol
