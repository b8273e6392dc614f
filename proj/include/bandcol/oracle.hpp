#pragma once

#include <optional>

#include "bandcol/graph.hpp"
#include "bandcol/types.hpp"

namespace bandcol {

// Exact minimum span by backtracking over all colorings, for ground truth on
// small instances.  Returns the smallest feasible span in
// [trivial lower bound, max_span], or nullopt when no coloring with span
// <= max_span exists.  Throws std::invalid_argument when the instance has
// more than max_vertices vertices.
std::optional<Color> exact_min_span(const WeightedGraph& g, Color max_span,
                                    Vertex max_vertices = 10);

// The witness coloring for the minimum span, when one exists.
std::optional<Coloring> exact_min_span_coloring(const WeightedGraph& g, Color max_span,
                                                Vertex max_vertices = 10);

}  // namespace bandcol
